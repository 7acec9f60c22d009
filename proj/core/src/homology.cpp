#include "opext/homology.hpp"

#include <map>
#include <mutex>

namespace opext {

namespace {

std::vector<std::size_t> hom_var_offsets(const Representation& m, const Representation& n) {
    int nv = m.algebra()->num_vertices();
    std::vector<std::size_t> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(n.dim(v)) * m.dim(v);
    return off;
}

ModuleMap unflatten(const Representation& m, const Representation& n, const Matrix& col) {
    auto off = hom_var_offsets(m, n);
    std::vector<Matrix> maps;
    for (int v = 0; v < m.algebra()->num_vertices(); ++v) {
        Matrix f = Matrix::zero(m.algebra()->field(), n.dim(v), m.dim(v));
        for (int r = 0; r < n.dim(v); ++r)
            for (int c = 0; c < m.dim(v); ++c)
                f.set(r, c, col.at(off[v] + static_cast<std::size_t>(r) * m.dim(v) + c, 0));
        maps.push_back(std::move(f));
    }
    return ModuleMap(m, n, std::move(maps));
}

}  // namespace

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n) {
    require_same_algebra(m, n);
    auto alg = m.algebra();
    const Quiver& q = alg->quiver();
    auto off = hom_var_offsets(m, n);
    std::size_t nvar = off.back();

    std::size_t nrow = 0;
    for (const auto& a : q.arrows) nrow += static_cast<std::size_t>(n.dim(a.tgt)) * m.dim(a.src);
    Matrix cons = Matrix::zero(alg->field(), nrow, nvar);
    auto addto = [&](std::size_t r, std::size_t c, const mpq_class& v) { cons.set(r, c, cons.at(r, c) + v); };

    std::size_t r0 = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        int s = q.arrows[ai].src, t = q.arrows[ai].tgt;
        const Matrix& ma = m.arrow_map(ai);
        const Matrix& na = n.arrow_map(ai);
        // (N_a f_s - f_t M_a)_{i j} = 0
        for (int i = 0; i < n.dim(t); ++i)
            for (int j = 0; j < m.dim(s); ++j) {
                std::size_t row = r0 + static_cast<std::size_t>(i) * m.dim(s) + j;
                for (int k = 0; k < n.dim(s); ++k)
                    addto(row, off[s] + static_cast<std::size_t>(k) * m.dim(s) + j, na.at(i, k));
                for (int k = 0; k < m.dim(t); ++k)
                    addto(row, off[t] + static_cast<std::size_t>(i) * m.dim(t) + k, -ma.at(k, j));
            }
        r0 += static_cast<std::size_t>(n.dim(t)) * m.dim(s);
    }

    Matrix ker = kernel_basis(cons);
    std::vector<ModuleMap> basis;
    for (std::size_t c = 0; c < ker.cols(); ++c)
        basis.push_back(unflatten(m, n, ker.columns({c})));
    return basis;
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_basis(m, n).size(); }

SubQuotient kernel(const ModuleMap& f) {
    auto alg = f.source().algebra();
    const Quiver& q = alg->quiver();
    int nv = alg->num_vertices();
    std::vector<Matrix> incl;
    std::vector<int> dims(nv, 0);
    for (int v = 0; v < nv; ++v) {
        incl.push_back(kernel_basis(f.vertex_map(v)));
        dims[v] = static_cast<int>(incl[v].cols());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        auto x = solve_right(incl[t], f.source().arrow_map(a) * incl[s]);
        if (!x) throw Error("kernel is not closed under the arrow action");
        maps.push_back(*x);
    }
    SubQuotient out;
    out.rep = Representation(alg, dims, std::move(maps));
    out.map = ModuleMap(out.rep, f.source(), std::move(incl));
    return out;
}

SubQuotient image(const ModuleMap& f) {
    auto alg = f.source().algebra();
    const Quiver& q = alg->quiver();
    int nv = alg->num_vertices();
    std::vector<Matrix> incl;
    std::vector<int> dims(nv, 0);
    for (int v = 0; v < nv; ++v) {
        incl.push_back(column_space_basis(f.vertex_map(v)));
        dims[v] = static_cast<int>(incl[v].cols());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        auto x = solve_right(incl[t], f.target().arrow_map(a) * incl[s]);
        if (!x) throw Error("image is not closed under the arrow action");
        maps.push_back(*x);
    }
    SubQuotient out;
    out.rep = Representation(alg, dims, std::move(maps));
    out.map = ModuleMap(out.rep, f.target(), std::move(incl));
    return out;
}

SubQuotient cokernel(const ModuleMap& f) {
    auto alg = f.source().algebra();
    const Quiver& q = alg->quiver();
    int nv = alg->num_vertices();
    std::vector<Matrix> proj, section;
    std::vector<int> dims(nv, 0);
    for (int v = 0; v < nv; ++v) {
        Matrix b = column_space_basis(f.vertex_map(v));
        Matrix c = complete_to_basis(b);
        Matrix t = b.hstack(c);
        auto tinv = inverse(t);
        if (!tinv) throw Error("cokernel basis completion failed");
        proj.push_back(tinv->submatrix(b.cols(), 0, c.cols(), t.rows()));
        section.push_back(std::move(c));
        dims[v] = static_cast<int>(section[v].cols());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        maps.push_back(proj[t] * f.target().arrow_map(a) * section[s]);
    }
    SubQuotient out;
    out.rep = Representation(alg, dims, std::move(maps));
    out.map = ModuleMap(f.target(), out.rep, std::move(proj));
    return out;
}

Representation simple_module(const AlgebraPtr& alg, int v) {
    std::vector<int> dims(alg->num_vertices(), 0);
    dims[v] = 1;
    std::vector<Matrix> maps;
    for (const auto& a : alg->quiver().arrows)
        maps.push_back(Matrix::zero(alg->field(), dims[a.tgt], dims[a.src]));
    return Representation(alg, std::move(dims), std::move(maps));
}

int ProjectiveSum::index_of(int w, int copy, const Path& p) const {
    const auto& b = basis[w];
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i].first == copy && b[i].second == p) return static_cast<int>(i);
    return -1;
}

ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<int>& vertices) {
    const Quiver& q = alg->quiver();
    int nv = alg->num_vertices();
    ProjectiveSum out;
    out.vertices = vertices;
    out.basis.assign(nv, {});
    for (std::size_t c = 0; c < vertices.size(); ++c)
        for (int bi : alg->basis_from(vertices[c])) {
            const Path& p = alg->basis()[bi];
            out.basis[p.target(q)].push_back({static_cast<int>(c), p});
        }
    std::vector<int> dims(nv, 0);
    for (int v = 0; v < nv; ++v) dims[v] = static_cast<int>(out.basis[v].size());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        Matrix m = Matrix::zero(alg->field(), dims[t], dims[s]);
        for (int col = 0; col < dims[s]; ++col) {
            const auto& [copy, p] = out.basis[s][col];
            for (const auto& term : alg->reduce(p.then(Path{s, {static_cast<int>(a)}}))) {
                int row = out.index_of(t, copy, term.path);
                if (row < 0) throw Error("projective basis bookkeeping is inconsistent");
                m.set(row, col, m.at(row, col) + term.coeff);
            }
        }
        maps.push_back(std::move(m));
    }
    out.rep = Representation(alg, std::move(dims), std::move(maps));
    return out;
}

Representation projective_module(const AlgebraPtr& alg, int v) { return projective_sum(alg, {v}).rep; }

SubQuotient radical(const Representation& m) {
    auto alg = m.algebra();
    const Quiver& q = alg->quiver();
    int nv = alg->num_vertices();
    std::vector<Matrix> incl;
    std::vector<int> dims(nv, 0);
    for (int v = 0; v < nv; ++v) {
        Matrix span = Matrix::zero(alg->field(), m.dim(v), 0);
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].tgt == v) span = span.hstack(m.arrow_map(a));
        incl.push_back(column_space_basis(span));
        dims[v] = static_cast<int>(incl[v].cols());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        auto x = solve_right(incl[t], m.arrow_map(a) * incl[s]);
        if (!x) throw Error("radical is not closed under the arrow action");
        maps.push_back(*x);
    }
    SubQuotient out;
    out.rep = Representation(alg, dims, std::move(maps));
    out.map = ModuleMap(out.rep, m, std::move(incl));
    return out;
}

SubQuotient top(const Representation& m) { return cokernel(radical(m).map); }

SubQuotient socle(const Representation& m) {
    auto alg = m.algebra();
    const Quiver& q = alg->quiver();
    int nv = alg->num_vertices();
    std::vector<Matrix> incl;
    std::vector<int> dims(nv, 0);
    for (int v = 0; v < nv; ++v) {
        Matrix stack = Matrix::zero(alg->field(), 0, m.dim(v));
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].src == v) stack = stack.vstack(m.arrow_map(a));
        incl.push_back(kernel_basis(stack));
        dims[v] = static_cast<int>(incl[v].cols());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        maps.push_back(Matrix::zero(alg->field(), dims[q.arrows[a].tgt], dims[q.arrows[a].src]));
    SubQuotient out;
    out.rep = Representation(alg, dims, std::move(maps));
    out.map = ModuleMap(out.rep, m, std::move(incl));
    return out;
}

ProjectiveCover projective_cover(const Representation& m) {
    auto alg = m.algebra();
    int nv = alg->num_vertices();
    SubQuotient t = top(m);

    std::vector<int> vertices;
    std::vector<Matrix> generators;  // one column in M_v per copy
    for (int v = 0; v < nv; ++v)
        for (int j = 0; j < t.rep.dim(v); ++j) {
            Matrix e = Matrix::zero(alg->field(), t.rep.dim(v), 1);
            e.set(j, 0, 1);
            auto g = solve_right(t.map.vertex_map(v), e);
            if (!g) throw Error("top projection is not surjective");
            vertices.push_back(v);
            generators.push_back(*g);
        }

    ProjectiveCover out;
    out.p = projective_sum(alg, vertices);
    std::vector<Matrix> maps;
    for (int w = 0; w < nv; ++w) {
        Matrix f = Matrix::zero(alg->field(), m.dim(w), out.p.rep.dim(w));
        for (int col = 0; col < out.p.rep.dim(w); ++col) {
            const auto& [copy, p] = out.p.basis[w][col];
            Matrix img = m.evaluate(p) * generators[copy];
            for (int r = 0; r < m.dim(w); ++r) f.set(r, col, img.at(r, 0));
        }
        maps.push_back(std::move(f));
    }
    out.cover = ModuleMap(out.p.rep, m, std::move(maps));
    if (!out.cover.is_surjective()) throw Error("projective cover construction failed");
    return out;
}

bool is_projective(const Representation& m) {
    return kernel(projective_cover(m).cover).rep.is_zero();
}

bool is_injective_module(const Representation& m) { return is_projective(dual(m)); }

std::vector<std::vector<PathCombo>> algebra_matrix_of(const ModuleMap& d, const ProjectiveSum& src,
                                                      const ProjectiveSum& dst) {
    std::vector<std::vector<PathCombo>> entries(dst.vertices.size(),
                                                std::vector<PathCombo>(src.vertices.size()));
    for (std::size_t j = 0; j < src.vertices.size(); ++j) {
        int vj = src.vertices[j];
        int col = src.index_of(vj, static_cast<int>(j), Path{vj, {}});
        if (col < 0) throw Error("projective summand lost its unit basis vector");
        const Matrix& f = d.vertex_map(vj);
        for (std::size_t row = 0; row < f.rows(); ++row) {
            if (f.at(row, col) == 0) continue;
            const auto& [i, p] = dst.basis[vj][row];
            entries[i][j].push_back({f.at(row, col), p});
        }
    }
    for (auto& r : entries)
        for (auto& e : r) e = combo_normalize(e, FieldOps(d.source().algebra()->field()));
    return entries;
}

ModuleMap map_between_projective_sums(const ProjectiveSum& src, const ProjectiveSum& dst,
                                      const std::vector<std::vector<PathCombo>>& entries) {
    auto alg = src.rep.algebra();
    int nv = alg->num_vertices();
    std::vector<Matrix> maps;
    for (int w = 0; w < nv; ++w) {
        Matrix f = Matrix::zero(alg->field(), dst.rep.dim(w), src.rep.dim(w));
        for (int col = 0; col < src.rep.dim(w); ++col) {
            const auto& [j, q] = src.basis[w][col];
            for (std::size_t i = 0; i < dst.vertices.size(); ++i)
                for (const auto& term : entries[i][j])
                    for (const auto& rt : alg->reduce(term.path.then(q))) {
                        int row = dst.index_of(w, static_cast<int>(i), rt.path);
                        if (row < 0) throw Error("projective basis bookkeeping is inconsistent");
                        f.set(row, col, f.at(row, col) + term.coeff * rt.coeff);
                    }
        }
        maps.push_back(std::move(f));
    }
    return ModuleMap(src.rep, dst.rep, std::move(maps));
}

ProjPresentation minimal_projective_presentation(const Representation& m) {
    ProjPresentation pres;
    pres.target = m;
    auto c0 = projective_cover(m);
    pres.p0 = c0.p;
    pres.cover = c0.cover;
    auto k = kernel(c0.cover);
    pres.omega = k.rep;
    pres.omega_incl = k.map;
    auto c1 = projective_cover(k.rep);
    pres.p1 = c1.p;
    pres.d = compose(k.map, c1.cover);
    pres.algebra_matrix = algebra_matrix_of(pres.d, pres.p1, pres.p0);
    return pres;
}

AlgebraPtr opposite_of(const AlgebraPtr& alg) {
    static std::mutex mu;
    static std::map<const Algebra*, AlgebraPtr> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(alg.get());
    if (it != memo.end()) return it->second;
    AlgebraPtr op = std::make_shared<Algebra>(alg->opposite());
    memo[alg.get()] = op;
    memo[op.get()] = alg;
    return op;
}

Representation dual(const Representation& m) {
    AlgebraPtr op = opposite_of(m.algebra());
    std::vector<Matrix> maps;
    for (const auto& f : m.arrow_maps()) maps.push_back(f.transpose());
    return Representation(op, m.dims(), std::move(maps));
}

Representation tau(const Representation& m) {
    auto alg = m.algebra();
    if (m.is_zero()) return Representation::zero(alg);
    ProjPresentation pres = minimal_projective_presentation(m);
    if (pres.p1.vertices.empty()) return Representation::zero(alg);  // projective

    AlgebraPtr op = opposite_of(alg);
    ProjectiveSum tsrc = projective_sum(op, pres.p0.vertices);
    ProjectiveSum tdst = projective_sum(op, pres.p1.vertices);
    std::vector<std::vector<PathCombo>> entries(tdst.vertices.size(),
                                                std::vector<PathCombo>(tsrc.vertices.size()));
    for (std::size_t i = 0; i < pres.p0.vertices.size(); ++i)
        for (std::size_t j = 0; j < pres.p1.vertices.size(); ++j)
            for (const auto& t : pres.algebra_matrix[i][j])
                entries[j][i].push_back({t.coeff, t.path.reversed(alg->quiver(), op->quiver())});
    ModuleMap dop = map_between_projective_sums(tsrc, tdst, entries);
    Representation tr = cokernel(dop).rep;
    return dual(tr);
}

Representation injective_module(const AlgebraPtr& alg, int v) {
    return dual(projective_module(opposite_of(alg), v));
}

ExtSpace ext_space(int degree, const Representation& m, const Representation& n) {
    require_same_algebra(m, n);
    if (degree < 0) throw Error("negative ext degree");
    if (degree == 0) {
        ExtSpace out;
        out.representatives = hom_basis(m, n);
        out.dim = out.representatives.size();
        return out;
    }
    Representation cur = m;
    for (int k = 1; k < degree; ++k) cur = kernel(projective_cover(cur).cover).rep;
    auto c0 = projective_cover(cur);
    auto om = kernel(c0.cover);

    ExtSpace out;
    if (om.rep.is_zero() || n.is_zero()) return out;

    auto hp = hom_basis(c0.p.rep, n);
    auto ho = hom_basis(om.rep, n);
    std::size_t flat = 0;
    for (int v = 0; v < m.algebra()->num_vertices(); ++v)
        flat += static_cast<std::size_t>(n.dim(v)) * om.rep.dim(v);
    Matrix span = Matrix::zero(m.algebra()->field(), flat, 0);
    for (const auto& h : hp) span = span.hstack(flatten_map(compose(h, om.map)));
    span = column_space_basis(span);
    std::size_t base_rank = span.cols();
    for (const auto& h : ho) {
        Matrix cand = span.hstack(flatten_map(h));
        if (rank(cand) > span.cols()) {
            out.representatives.push_back(h);
            span = column_space_basis(cand);
        }
    }
    out.dim = out.representatives.size();
    (void)base_rank;
    return out;
}

std::size_t ext_dim(int degree, const Representation& m, const Representation& n) {
    return ext_space(degree, m, n).dim;
}

std::optional<int> projective_dimension(const Representation& m) {
    if (m.is_zero()) return 0;
    Representation cur = m;
    int steps = 0;
    int cap = static_cast<int>(m.algebra()->dim()) + 2;
    while (true) {
        auto k = kernel(projective_cover(cur).cover);
        if (k.rep.is_zero()) return steps;
        cur = k.rep;
        if (++steps > cap) return std::nullopt;
    }
}

std::optional<ModuleMap> find_isomorphism(const Representation& m, const Representation& n,
                                          std::uint64_t seed) {
    require_same_algebra(m, n);
    if (m.dims() != n.dims()) return std::nullopt;
    if (m.is_zero()) return ModuleMap::zero(m, n);
    auto h = hom_basis(m, n);
    if (h.empty()) return std::nullopt;

    const Field& f = m.algebra()->field();
    auto try_coeffs = [&](const std::vector<mpq_class>& c) -> std::optional<ModuleMap> {
        ModuleMap cand = ModuleMap::zero(m, n);
        for (std::size_t i = 0; i < h.size(); ++i)
            if (c[i] != 0) cand = add(cand, scale(c[i], h[i]));
        if (cand.is_isomorphism()) return cand;
        return std::nullopt;
    };

    if (f.kind == Field::Kind::PrimeField) {
        // Exhaustive when small enough; every iso is some combination.
        double combos = 1;
        for (std::size_t i = 0; i < h.size() && combos < 1e6; ++i) combos *= static_cast<double>(f.p);
        if (combos < 2e5) {
            std::vector<mpq_class> c(h.size(), 0);
            while (true) {
                if (auto r = try_coeffs(c)) return r;
                std::size_t i = 0;
                while (i < c.size()) {
                    c[i] = c[i] + 1;
                    if (c[i] == f.p) {
                        c[i] = 0;
                        ++i;
                    } else
                        break;
                }
                if (i == c.size()) return std::nullopt;
            }
        }
    }

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int t = 0; t < 400; ++t) {
        std::vector<mpq_class> c(h.size());
        for (auto& x : c) {
            if (f.kind == Field::Kind::PrimeField)
                x = mpq_class(static_cast<long>(rng() % f.p));
            else
                x = mpq_class(static_cast<long>(rng() % 11) - 5);
        }
        if (auto r = try_coeffs(c)) return r;
    }
    return std::nullopt;
}

bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
    return find_isomorphism(m, n, seed).has_value();
}

void validate_ses(const ShortExact& s) {
    s.incl.validate();
    s.proj.validate();
    require_same_algebra(s.incl.target(), s.proj.source());
    if (s.incl.target().dims() != s.proj.source().dims())
        throw ComparisonFailure("middle terms of the sequence disagree");
    if (!s.incl.is_injective()) throw ComparisonFailure("left map of the sequence is not injective");
    if (!s.proj.is_surjective()) throw ComparisonFailure("right map of the sequence is not surjective");
    if (!compose(s.proj, s.incl).is_zero()) throw ComparisonFailure("the sequence does not compose to zero");
    for (int v = 0; v < s.incl.source().algebra()->num_vertices(); ++v)
        if (s.incl.source().dim(v) + s.proj.target().dim(v) != s.incl.target().dim(v))
            throw ComparisonFailure("the sequence is not exact in the middle");
}

Ext1Setup ext1_setup(const Representation& x, const Representation& y) {
    require_same_algebra(x, y);
    Ext1Setup s;
    s.x = x;
    s.y = y;
    s.pres = minimal_projective_presentation(x);

    std::size_t flat = 0;
    for (int v = 0; v < x.algebra()->num_vertices(); ++v)
        flat += static_cast<std::size_t>(y.dim(v)) * s.pres.omega.dim(v);
    Matrix cob = Matrix::zero(x.algebra()->field(), flat, 0);
    for (const auto& h : hom_basis(s.pres.p0.rep, y))
        cob = cob.hstack(flatten_map(compose(h, s.pres.omega_incl)));
    s.coboundary_flats = column_space_basis(cob);

    Matrix span = s.coboundary_flats;
    s.cocycle_flats = Matrix::zero(x.algebra()->field(), flat, 0);
    for (const auto& h : hom_basis(s.pres.omega, y)) {
        Matrix cand = span.hstack(flatten_map(h));
        if (rank(cand) > span.cols()) {
            s.cocycles.push_back(h);
            s.cocycle_flats = s.cocycle_flats.hstack(flatten_map(h));
            span = column_space_basis(cand);
        }
    }
    return s;
}

ShortExact realize_ext1(const Ext1Setup& s, const std::vector<mpq_class>& coeffs) {
    if (coeffs.size() != s.cocycles.size()) throw ComparisonFailure("coefficient count mismatch");
    ModuleMap psi = ModuleMap::zero(s.pres.omega, s.y);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) psi = add(psi, scale(coeffs[i], s.cocycles[i]));

    DirectSum yp = direct_sum({s.y, s.pres.p0.rep});
    ModuleMap g = add(compose(yp.inclusions[0], psi),
                      scale(-1, compose(yp.inclusions[1], s.pres.omega_incl)));
    SubQuotient cok = cokernel(g);

    ShortExact out;
    out.incl = compose(cok.map, yp.inclusions[0]);
    ModuleMap r = compose(s.pres.cover, yp.projections[1]);  // Y + P0 -> X
    std::vector<Matrix> qm;
    for (int v = 0; v < s.x.algebra()->num_vertices(); ++v) {
        auto sol = solve_right(cok.map.vertex_map(v).transpose(), r.vertex_map(v).transpose());
        if (!sol) throw TransportFailure("pushout projection does not factor");
        qm.push_back(sol->transpose());
    }
    out.proj = ModuleMap(cok.rep, s.x, std::move(qm));
    validate_ses(out);
    return out;
}

std::vector<mpq_class> classify_ext1(const Ext1Setup& s, const ShortExact& ses) {
    validate_ses(ses);
    if (ses.proj.target().dims() != s.x.dims() || ses.incl.source().dims() != s.y.dims())
        throw TransportFailure("sequence end terms do not match the fixed coordinates");

    const Representation& e = ses.incl.target();
    auto h = hom_basis(s.pres.p0.rep, e);
    std::size_t flat = 0;
    for (int v = 0; v < s.x.algebra()->num_vertices(); ++v)
        flat += static_cast<std::size_t>(s.x.dim(v)) * s.pres.p0.rep.dim(v);
    Matrix a = Matrix::zero(s.x.algebra()->field(), flat, 0);
    for (const auto& hi : h) a = a.hstack(flatten_map(compose(ses.proj, hi)));
    auto sol = solve_right(a, flatten_map(s.pres.cover));
    if (!sol) throw TransportFailure("projective cover does not lift through the sequence");
    ModuleMap lam = ModuleMap::zero(s.pres.p0.rep, e);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (sol->at(i, 0) != 0) lam = add(lam, scale(sol->at(i, 0), h[i]));

    ModuleMap li = compose(lam, s.pres.omega_incl);  // Omega -> E, lands in Y
    std::vector<Matrix> pm;
    for (int v = 0; v < s.x.algebra()->num_vertices(); ++v) {
        auto fv = solve_right(ses.incl.vertex_map(v), li.vertex_map(v));
        if (!fv) throw TransportFailure("lift does not land in the left term");
        pm.push_back(*fv);
    }
    ModuleMap psi(s.pres.omega, s.y, std::move(pm));

    Matrix sys = s.cocycle_flats.hstack(s.coboundary_flats);
    auto c = solve_right(sys, flatten_map(psi));
    if (!c) throw TransportFailure("class does not lie in the fixed coordinates");
    std::vector<mpq_class> out;
    for (std::size_t i = 0; i < s.cocycles.size(); ++i) out.push_back(c->at(i, 0));
    return out;
}

Representation random_module(const AlgebraPtr& alg, std::mt19937_64& rng) {
    int nv = alg->num_vertices();
    std::vector<int> v0, v1;
    for (int v = 0; v < nv; ++v) {
        for (std::uint64_t k = rng() % 3; k > 0; --k) v0.push_back(v);
        for (std::uint64_t k = rng() % 2; k > 0; --k) v1.push_back(v);
    }
    ProjectiveSum p0 = projective_sum(alg, v0);
    ProjectiveSum p1 = projective_sum(alg, v1);
    auto h = hom_basis(p1.rep, p0.rep);
    ModuleMap f = ModuleMap::zero(p1.rep, p0.rep);
    const Field& fl = alg->field();
    for (const auto& hi : h) {
        mpq_class c;
        if (fl.kind == Field::Kind::PrimeField)
            c = mpq_class(static_cast<long>(rng() % fl.p));
        else
            c = mpq_class(static_cast<long>(rng() % 5) - 2);
        if (c != 0) f = add(f, scale(c, hi));
    }
    return cokernel(f).rep;
}

}  // namespace opext
