#include "opext/subcat.hpp"

#include "opext/decompose.hpp"

namespace opext {

Representation SubcatSample::sum_of_generators() const {
    if (generators.empty()) return Representation::zero(algebra);
    return direct_sum(generators).sum;
}

SubcatSample subcat_from_indecomposables(AlgebraPtr alg, std::vector<Representation> gens,
                                         std::uint64_t seed) {
    SubcatSample out;
    out.algebra = std::move(alg);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        bool dup = false;
        for (const auto& h : out.generators)
            if (is_isomorphic(g, h, seed)) {
                dup = true;
                break;
            }
        if (!dup) out.generators.push_back(std::move(g));
    }
    std::sort(out.generators.begin(), out.generators.end(),
              [](const Representation& a, const Representation& b) { return a.sort_key() < b.sort_key(); });
    return out;
}

SubcatSample subcat_from_modules(AlgebraPtr alg, const std::vector<Representation>& mods,
                                 std::uint64_t seed) {
    std::vector<Representation> gens;
    for (const auto& m : mods)
        for (auto& s : decompose(m, seed)) gens.push_back(std::move(s));
    return subcat_from_indecomposables(std::move(alg), std::move(gens), seed);
}

SubQuotient trace(const SubcatSample& t, const Representation& m) {
    auto alg = m.algebra();
    int nv = alg->num_vertices();
    std::vector<Matrix> incl;
    std::vector<int> dims(nv, 0);
    std::vector<Matrix> spans;
    for (int v = 0; v < nv; ++v) spans.push_back(Matrix::zero(alg->field(), m.dim(v), 0));
    for (const auto& g : t.generators)
        for (const auto& f : hom_basis(g, m))
            for (int v = 0; v < nv; ++v) spans[v] = spans[v].hstack(f.vertex_map(v));
    for (int v = 0; v < nv; ++v) {
        incl.push_back(column_space_basis(spans[v]));
        dims[v] = static_cast<int>(incl[v].cols());
    }
    std::vector<Matrix> maps;
    const Quiver& q = alg->quiver();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto x = solve_right(incl[q.arrows[a].tgt], m.arrow_map(a) * incl[q.arrows[a].src]);
        if (!x) throw Error("trace is not closed under the arrow action");
        maps.push_back(*x);
    }
    SubQuotient out;
    out.rep = Representation(alg, dims, std::move(maps));
    out.map = ModuleMap(out.rep, m, std::move(incl));
    return out;
}

bool in_gen(const SubcatSample& t, const Representation& m) {
    return trace(t, m).rep.dims() == m.dims();
}

bool in_cogen(const SubcatSample& t, const Representation& m) {
    auto alg = m.algebra();
    for (int v = 0; v < alg->num_vertices(); ++v) {
        if (m.dim(v) == 0) continue;
        Matrix stack = Matrix::zero(alg->field(), 0, m.dim(v));
        for (const auto& g : t.generators)
            for (const auto& f : hom_basis(m, g)) stack = stack.vstack(f.vertex_map(v));
        if (kernel_basis(stack).cols() != 0) return false;
    }
    return true;
}

bool in_add(const SubcatSample& t, const Representation& m) {
    if (m.is_zero()) return true;
    auto alg = m.algebra();
    std::size_t flat = 0;
    for (int v = 0; v < alg->num_vertices(); ++v)
        flat += static_cast<std::size_t>(m.dim(v)) * m.dim(v);
    Matrix span = Matrix::zero(alg->field(), flat, 0);
    for (const auto& g : t.generators) {
        auto to = hom_basis(m, g);
        auto from = hom_basis(g, m);
        for (const auto& f : to)
            for (const auto& h : from) span = span.hstack(flatten_map(compose(h, f)));
    }
    return subspace_contains(span, flatten_map(ModuleMap::identity(m)));
}

ModuleMap left_approximation(const SubcatSample& t, const Representation& m) {
    std::vector<Representation> parts;
    std::vector<ModuleMap> comps;
    for (const auto& g : t.generators)
        for (const auto& f : hom_basis(m, g)) {
            parts.push_back(g);
            comps.push_back(f);
        }
    if (parts.empty()) return ModuleMap::zero(m, Representation::zero(m.algebra()));
    DirectSum ds = direct_sum(parts);
    ModuleMap out = ModuleMap::zero(m, ds.sum);
    for (std::size_t k = 0; k < comps.size(); ++k) out = add(out, compose(ds.inclusions[k], comps[k]));
    return out;
}

ModuleMap right_approximation(const SubcatSample& t, const Representation& m) {
    std::vector<Representation> parts;
    std::vector<ModuleMap> comps;
    for (const auto& g : t.generators)
        for (const auto& f : hom_basis(g, m)) {
            parts.push_back(g);
            comps.push_back(f);
        }
    if (parts.empty()) return ModuleMap::zero(Representation::zero(m.algebra()), m);
    DirectSum ds = direct_sum(parts);
    ModuleMap out = ModuleMap::zero(ds.sum, m);
    for (std::size_t k = 0; k < comps.size(); ++k) out = add(out, compose(comps[k], ds.projections[k]));
    return out;
}

}  // namespace opext
