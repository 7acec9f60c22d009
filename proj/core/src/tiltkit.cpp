#include "opext/tiltkit.hpp"

#include "opext/decompose.hpp"

namespace opext {

namespace {

std::string dims_str(const Representation& m) {
    std::string s = "(";
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        s += (v ? "," : "") + std::to_string(m.dim(v));
    return s + ")";
}

// Largest finite pd among generators, capped; used for full-perp tests.
int perp_degree_cap(const SubcatSample& t) {
    int cap = 1;
    for (const auto& g : t.generators) {
        auto pd = projective_dimension(g);
        int d = pd ? *pd : t.algebra->num_vertices() + 2;
        cap = std::max(cap, d);
    }
    return cap;
}

bool hom_sigma_surjective(const ProjPresentation& pres, const Representation& m) {
    return hom_along_surjective(pres.d, m);
}

}  // namespace

bool hom_along_surjective(const ModuleMap& f, const Representation& m) {
    std::size_t want = hom_dim(f.source(), m);
    if (want == 0) return true;
    auto hs = hom_basis(f.target(), m);
    std::size_t flat = 0;
    for (int v = 0; v < m.algebra()->num_vertices(); ++v)
        flat += static_cast<std::size_t>(m.dim(v)) * f.source().dim(v);
    Matrix a = Matrix::zero(m.algebra()->field(), flat, 0);
    for (const auto& h : hs) a = a.hstack(flatten_map(compose(h, f)));
    return rank(a) == want;
}

std::vector<char> gen_membership(const SubcatSample& t, const std::vector<Representation>& indecs) {
    std::vector<char> out;
    for (const auto& x : indecs) out.push_back(in_gen(t, x) ? 1 : 0);
    return out;
}

Verdict is_tilting(const SubcatSample& t, TiltingMode mode,
                   const std::vector<Representation>& indecs, std::uint64_t seed) {
    Verdict v;
    if (mode == TiltingMode::DefBBOS) {
        {
            Clause c{"rigidity: ext1 vanishes on generator pairs"};
            for (const auto& a : t.generators)
                for (const auto& b : t.generators)
                    if (ext_dim(1, a, b) != 0) {
                        c.pass = false;
                        c.detail = "ext1 " + dims_str(a) + " -> " + dims_str(b);
                    }
            v.add(c);
        }
        {
            Clause c{"projective dimension at most one"};
            for (const auto& a : t.generators) {
                auto pd = projective_dimension(a);
                if (!pd || *pd > 1) {
                    c.pass = false;
                    c.detail = "pd " + dims_str(a);
                }
            }
            v.add(c);
        }
        {
            Clause c{"two-term add-T coresolution of each projective"};
            for (int p = 0; p < t.algebra->num_vertices(); ++p) {
                Representation pv = projective_module(t.algebra, p);
                ModuleMap f = left_approximation(t, pv);
                if (!f.is_injective()) {
                    c.pass = false;
                    c.detail = "approximation of P_" + std::to_string(p) + " not injective";
                    continue;
                }
                if (!in_add(t, cokernel(f).rep)) {
                    c.pass = false;
                    c.detail = "cokernel at P_" + std::to_string(p) + " not in add";
                }
            }
            v.add(c);
        }
        return v;
    }

    // DefB: T-perp = Fac(T) over the enumerated indecomposables.
    if (indecs.empty()) throw NotRepFinite("DefB needs an enumeration of indecomposables");
    int cap = perp_degree_cap(t);
    Clause c{"T-perp equals Fac(T) over the enumeration"};
    for (const auto& x : indecs) {
        bool perp = true;
        for (const auto& g : t.generators)
            for (int j = 1; j <= cap && perp; ++j)
                if (ext_dim(j, g, x) != 0) perp = false;
        bool fac = in_gen(t, x);
        if (perp != fac) {
            c.pass = false;
            c.detail = "disagreement at " + dims_str(x);
        }
    }
    v.add(c);
    v.add({"cogenerating and contravariantly finite", true, false, "automatic at findim scale"});
    (void)seed;
    return v;
}

Verdict is_tau_rigid(const SubcatSample& t) {
    Verdict v;
    Clause c{"Hom(g, T') surjective for all generator pairs"};
    for (const auto& a : t.generators) {
        ProjPresentation pres = minimal_projective_presentation(a);
        for (const auto& b : t.generators)
            if (!hom_sigma_surjective(pres, b)) {
                c.pass = false;
                c.detail = "pair " + dims_str(a) + ", " + dims_str(b);
            }
    }
    v.add(c);
    return v;
}

Verdict is_support_tau_tilting(const SubcatSample& t, SttMode mode,
                               const std::vector<Representation>& indecs, std::uint64_t seed) {
    Verdict v;
    (void)indecs;
    (void)seed;
    if (mode == SttMode::Def61) {
        Verdict rigid = is_tau_rigid(t);
        for (auto& c : rigid.clauses) v.add(c);
        Clause c{"left approximation sequence P -> T0 -> T1 -> 0 per projective"};
        for (int p = 0; p < t.algebra->num_vertices(); ++p) {
            Representation pv = projective_module(t.algebra, p);
            ModuleMap f = left_approximation(t, pv);
            if (!in_add(t, cokernel(f).rep)) {
                c.pass = false;
                c.detail = "cokernel at P_" + std::to_string(p) + " not in add";
            }
        }
        v.add(c);
        return v;
    }

    // AIRPairs
    {
        Clause c{"Hom(T, tau T) = 0"};
        for (const auto& b : t.generators) {
            Representation tb = tau(b);
            for (const auto& a : t.generators)
                if (hom_dim(a, tb) != 0) {
                    c.pass = false;
                    c.detail = "pair " + dims_str(a) + ", tau" + dims_str(b);
                }
        }
        v.add(c);
    }
    {
        Clause c{"support pair count |T| + |P-part| = #vertices"};
        Representation sum = t.sum_of_generators();
        int zero_vertices = 0;
        for (int p = 0; p < t.algebra->num_vertices(); ++p)
            if (sum.dim(p) == 0) ++zero_vertices;
        if (static_cast<int>(t.generators.size()) + zero_vertices != t.algebra->num_vertices()) {
            c.pass = false;
            c.detail = std::to_string(t.generators.size()) + " + " + std::to_string(zero_vertices) +
                       " != " + std::to_string(t.algebra->num_vertices());
        }
        v.add(c);
    }
    return v;
}

SiltingPresentation silting_presentation(const SubcatSample& t) {
    SiltingPresentation out;
    Representation sum = t.sum_of_generators();
    out.pres = minimal_projective_presentation(sum);
    for (int v = 0; v < t.algebra->num_vertices(); ++v)
        if (sum.dim(v) == 0) out.cosupport.push_back(v);
    return out;
}

bool d_sigma_contains(const SiltingPresentation& sigma, const Representation& m) {
    for (int v : sigma.cosupport)
        if (m.dim(v) != 0) return false;
    return hom_sigma_surjective(sigma.pres, m);
}

SiltingWitness is_silting_findim(const SubcatSample& t, const std::vector<Representation>& indecs,
                                 const std::vector<Representation>& extra, std::uint64_t seed) {
    (void)seed;
    SiltingWitness w;
    w.sigma = silting_presentation(t);
    Clause c{"D_sigma = Gen(T) over the enumeration"};
    for (const auto& x : indecs)
        if (d_sigma_contains(w.sigma, x) != in_gen(t, x)) {
            c.pass = false;
            c.detail = "disagreement at " + dims_str(x);
        }
    w.verdict.add(c);
    if (!extra.empty()) {
        Clause c2{"D_sigma = Gen(T) on the randomized family"};
        for (const auto& x : extra)
            if (d_sigma_contains(w.sigma, x) != in_gen(t, x)) {
                c2.pass = false;
                c2.detail = "disagreement at " + dims_str(x);
            }
        w.verdict.add(c2);
    }
    return w;
}

Verdict is_quasi_tilting_findim(const SubcatSample& t, const std::vector<Representation>& indecs,
                                std::uint64_t seed) {
    (void)seed;
    Verdict v;
    std::vector<const Representation*> genx;
    for (const auto& x : indecs)
        if (in_gen(t, x)) genx.push_back(&x);
    {
        Clause c{"Ext-projective in Gen(T)"};
        for (const auto* x : genx)
            for (const auto& g : t.generators)
                if (ext_dim(1, g, *x) != 0) {
                    c.pass = false;
                    c.detail = "ext1 " + dims_str(g) + " -> " + dims_str(*x);
                }
        v.add(c);
    }
    {
        Clause c{"Pres(T) = Gen(T): approximation kernels stay in Gen"};
        for (const auto* x : genx) {
            ModuleMap f = right_approximation(t, *x);
            if (!f.is_surjective()) {
                c.pass = false;
                c.detail = "right approximation onto " + dims_str(*x) + " not surjective";
                continue;
            }
            if (!in_gen(t, kernel(f).rep)) {
                c.pass = false;
                c.detail = "kernel at " + dims_str(*x) + " escapes Gen";
            }
        }
        v.add(c);
    }
    v.add({"finendo", true, false, "automatic for finite-dimensional modules"});
    return v;
}

ModuleMap dual_map(const ModuleMap& f) {
    std::vector<Matrix> maps;
    for (const auto& m : f.vertex_maps()) maps.push_back(m.transpose());
    return ModuleMap(dual(f.target()), dual(f.source()), std::move(maps));
}

CosiltingPresentation cosilting_presentation(const SubcatSample& t) {
    CosiltingPresentation out;
    Representation sum = t.sum_of_generators();
    ProjPresentation pres = minimal_projective_presentation(dual(sum));
    out.zeta = dual_map(pres.d);  // dual(P0) -> dual(P1) over the original algebra
    for (int v = 0; v < t.algebra->num_vertices(); ++v)
        if (sum.dim(v) == 0) out.cosupport.push_back(v);
    return out;
}

bool b_zeta_contains(const CosiltingPresentation& zeta, const Representation& m) {
    for (int v : zeta.cosupport)
        if (m.dim(v) != 0) return false;
    auto h0 = hom_basis(m, zeta.zeta.source());
    std::size_t target_dim = hom_dim(m, zeta.zeta.target());
    if (target_dim == 0) return true;
    std::size_t flat = 0;
    for (int v = 0; v < m.algebra()->num_vertices(); ++v)
        flat += static_cast<std::size_t>(zeta.zeta.target().dim(v)) * m.dim(v);
    Matrix a = Matrix::zero(m.algebra()->field(), flat, 0);
    for (const auto& h : h0) a = a.hstack(flatten_map(compose(zeta.zeta, h)));
    return rank(a) == target_dim;
}

Verdict is_cosilting_findim(const SubcatSample& t, const std::vector<Representation>& indecs,
                            std::uint64_t seed) {
    Verdict v;
    CosiltingPresentation zeta = cosilting_presentation(t);
    {
        Clause c{"B_zeta = Cogen(T) over the enumeration"};
        for (const auto& x : indecs)
            if (b_zeta_contains(zeta, x) != in_cogen(t, x)) {
                c.pass = false;
                c.detail = "disagreement at " + dims_str(x);
            }
        v.add(c);
    }
    {
        Clause c{"dual is silting over the opposite algebra"};
        AlgebraPtr op = opposite_of(t.algebra);
        std::vector<Representation> opgens, opind;
        for (const auto& g : t.generators) opgens.push_back(dual(g));
        for (const auto& x : indecs) opind.push_back(dual(x));
        SubcatSample opt = subcat_from_indecomposables(op, std::move(opgens), seed);
        if (!is_silting_findim(opt, opind, {}, seed).verdict.pass) c.pass = false;
        v.add(c);
    }
    return v;
}

SubcatSample transport_subcat(Direction dir, const RecollementView& rv, const SubcatSample& t,
                              std::uint64_t seed) {
    const ExtensionContext& ctx = rv.ctx();
    std::vector<Representation> images;
    if (dir == Direction::Restrict) {
        for (const auto& g : t.generators) images.push_back(restrict_module(ctx, g));
        return subcat_from_modules(ctx.base, images, seed);
    }
    for (const auto& g : t.generators) images.push_back(extend_module(ctx, g));
    images.push_back(rv.s());
    return subcat_from_modules(ctx.extended, images, seed);
}

TransportResult transport_tilting(Direction dir, const RecollementView& rv, const SubcatSample& t,
                                  const std::vector<Representation>& target_indecs,
                                  std::uint64_t seed) {
    TransportResult out;
    out.image = transport_subcat(dir, rv, t, seed);
    out.verdict = is_tilting(out.image, TiltingMode::DefBBOS, target_indecs, seed);
    Verdict defb = is_tilting(out.image, TiltingMode::DefB, target_indecs, seed);
    for (auto& c : defb.clauses) out.verdict.add(c);
    if (!out.verdict.pass) throw TransportFailure("transported subcategory failed a tilting clause");
    return out;
}

TransportResult transport_stt(Direction dir, const RecollementView& rv, const SubcatSample& t,
                              const std::vector<Representation>& target_indecs, std::uint64_t seed) {
    TransportResult out;
    out.image = transport_subcat(dir, rv, t, seed);
    out.verdict = is_support_tau_tilting(out.image, SttMode::Def61, target_indecs, seed);
    Verdict air = is_support_tau_tilting(out.image, SttMode::AIRPairs, target_indecs, seed);
    for (auto& c : air.clauses) out.verdict.add(c);
    if (!out.verdict.pass)
        throw TransportFailure("transported subcategory failed a support tau-tilting clause");
    return out;
}

namespace {

template <typename Pred>
std::vector<SubcatSample> enumerate_subsets(const AlgebraPtr& alg,
                                            const std::vector<Representation>& indecs,
                                            std::uint64_t seed, Pred pred) {
    if (indecs.size() > 20) throw SearchBudgetExceeded("too many indecomposables for subset search");
    std::vector<SubcatSample> out;
    for (std::uint64_t mask = 0; mask < (1ULL << indecs.size()); ++mask) {
        std::vector<Representation> gens;
        for (std::size_t i = 0; i < indecs.size(); ++i)
            if (mask & (1ULL << i)) gens.push_back(indecs[i]);
        SubcatSample t = subcat_from_indecomposables(alg, std::move(gens), seed);
        if (pred(t)) out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

std::vector<SubcatSample> enumerate_tilting(const AlgebraPtr& alg,
                                            const std::vector<Representation>& indecs,
                                            TiltingMode mode, std::uint64_t seed) {
    return enumerate_subsets(alg, indecs, seed, [&](const SubcatSample& t) {
        return is_tilting(t, mode, indecs, seed).pass;
    });
}

std::vector<SubcatSample> enumerate_stt(const AlgebraPtr& alg,
                                        const std::vector<Representation>& indecs, SttMode mode,
                                        std::uint64_t seed) {
    return enumerate_subsets(alg, indecs, seed, [&](const SubcatSample& t) {
        return is_support_tau_tilting(t, mode, indecs, seed).pass;
    });
}

std::vector<SubcatSample> enumerate_silting(const AlgebraPtr& alg,
                                            const std::vector<Representation>& indecs,
                                            std::uint64_t seed) {
    return enumerate_subsets(alg, indecs, seed, [&](const SubcatSample& t) {
        return is_silting_findim(t, indecs, {}, seed).verdict.pass;
    });
}

std::vector<SubcatSample> enumerate_cosilting(const AlgebraPtr& alg,
                                              const std::vector<Representation>& indecs,
                                              std::uint64_t seed) {
    return enumerate_subsets(alg, indecs, seed, [&](const SubcatSample& t) {
        return is_cosilting_findim(t, indecs, seed).pass;
    });
}

}  // namespace opext
