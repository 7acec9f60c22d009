#include "opext/decompose.hpp"

namespace opext {

namespace {

// Block-diagonal matrix of an endomorphism on the total space.
Matrix total_matrix(const ModuleMap& f) {
    const Field& fl = f.source().algebra()->field();
    std::size_t n = 0;
    for (const auto& m : f.vertex_maps()) n += m.rows();
    Matrix t = Matrix::zero(fl, n, n);
    std::size_t o = 0;
    for (const auto& m : f.vertex_maps()) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) t.set(o + r, o + c, m.at(r, c));
        o += m.rows();
    }
    return t;
}

Matrix vec(const Matrix& m) {
    Matrix c = Matrix::zero(m.field(), m.rows() * m.cols(), 1);
    std::size_t k = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) c.set(k++, 0, m.at(r, j));
    return c;
}

// Coefficients c_0..c_{d-1} with T^d = sum c_k T^k, d minimal.
std::vector<mpq_class> minimal_polynomial_tail(const Matrix& t) {
    Matrix stack = Matrix::zero(t.field(), t.rows() * t.cols(), 0);
    Matrix power = Matrix::identity(t.field(), t.rows());
    while (true) {
        Matrix col = vec(power);
        auto sol = solve_right(stack, col);
        if (sol) {
            std::vector<mpq_class> out;
            for (std::size_t i = 0; i < sol->rows(); ++i) out.push_back(sol->at(i, 0));
            return out;
        }
        stack = stack.hstack(col);
        power = power * t;
    }
}

// Rational roots of the monic minimal polynomial x^d - sum c_k x^k,
// by trial division of the integer content; best effort.
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& tail, const Field& f) {
    std::size_t d = tail.size();
    std::vector<mpq_class> coeff(d + 1);  // coeff[k] of x^k
    for (std::size_t k = 0; k < d; ++k) coeff[k] = -tail[k];
    coeff[d] = 1;
    auto eval = [&](const mpq_class& x) {
        mpq_class acc = 0;
        for (std::size_t k = d + 1; k-- > 0;) acc = acc * x + coeff[k];
        return acc;
    };
    std::vector<mpq_class> roots;
    FieldOps ops(f);
    if (f.kind == Field::Kind::PrimeField) {
        unsigned long cap = f.p < 5000 ? f.p : 5000;
        for (unsigned long r = 0; r < cap; ++r)
            if (ops.canon(eval(mpq_class(static_cast<long>(r)))) == 0) roots.push_back(static_cast<long>(r));
        return roots;
    }
    // over Q: candidates p/q with p | a0, q | a_d after clearing denominators
    mpz_class lcm = 1;
    for (const auto& c : coeff) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : coeff) ic.push_back(mpz_class(c * lcm));
    std::size_t low = 0;
    while (low <= d && ic[low] == 0) ++low;
    if (low > 0 && low <= d) roots.push_back(0);
    if (low > d) return roots;
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> out;
        n = abs(n);
        if (n == 0) return out;
        for (mpz_class q = 1; q * q <= n && q < 100000; ++q)
            if (n % q == 0) {
                out.push_back(q);
                out.push_back(n / q);
            }
        return out;
    };
    for (const auto& p : divisors(ic[low]))
        for (const auto& q : divisors(ic[d])) {
            for (int sign : {1, -1}) {
                mpq_class cand(sign * p, q);
                cand.canonicalize();
                if (eval(cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

ModuleMap power_map(const ModuleMap& f, std::size_t n) {
    ModuleMap acc = ModuleMap::identity(f.source());
    for (std::size_t i = 0; i < n; ++i) acc = compose(f, acc);
    return acc;
}

void split(const Representation& m, std::mt19937_64& rng, std::vector<Representation>& out);

// Fitting decomposition along phi; true if a proper split was found.
bool try_fitting(const Representation& m, const ModuleMap& phi, std::mt19937_64& rng,
                 std::vector<Representation>& out) {
    ModuleMap pn = power_map(phi, m.total_dim());
    SubQuotient k = kernel(pn);
    if (k.rep.is_zero() || k.rep.total_dim() == m.total_dim()) return false;
    SubQuotient i = image(pn);
    split(k.rep, rng, out);
    split(i.rep, rng, out);
    return true;
}

void split(const Representation& m, std::mt19937_64& rng, std::vector<Representation>& out) {
    if (m.is_zero()) return;
    if (m.total_dim() == 1 || top(m).rep.total_dim() == 1 || socle(m).rep.total_dim() == 1) {
        out.push_back(m);
        return;
    }
    auto endo = hom_basis(m, m);
    if (endo.size() == 1) {
        out.push_back(m);
        return;
    }

    const Field& f = m.algebra()->field();
    auto random_combo = [&]() {
        ModuleMap phi = ModuleMap::zero(m, m);
        for (const auto& h : endo) {
            mpq_class c = f.kind == Field::Kind::PrimeField
                              ? mpq_class(static_cast<long>(rng() % f.p))
                              : mpq_class(static_cast<long>(rng() % 7) - 3);
            if (c != 0) phi = add(phi, scale(c, h));
        }
        return phi;
    };

    std::vector<ModuleMap> candidates = endo;
    for (int t = 0; t < 24; ++t) candidates.push_back(random_combo());
    for (const auto& phi : candidates) {
        if (try_fitting(m, phi, rng, out)) return;
        for (const auto& lam : rational_roots(minimal_polynomial_tail(total_matrix(phi)), f)) {
            ModuleMap shifted = add(phi, scale(-lam, ModuleMap::identity(m)));
            if (try_fitting(m, shifted, rng, out)) return;
        }
    }

    // Cyclic local submodules with a retraction.
    std::vector<std::pair<int, Matrix>> gens;
    for (int v = 0; v < m.algebra()->num_vertices(); ++v)
        for (int j = 0; j < m.dim(v); ++j) {
            Matrix e = Matrix::zero(f, m.dim(v), 1);
            e.set(j, 0, 1);
            gens.push_back({v, e});
        }
    for (int t = 0; t < 20; ++t)
        for (int v = 0; v < m.algebra()->num_vertices(); ++v) {
            if (m.dim(v) == 0) continue;
            Matrix e = Matrix::zero(f, m.dim(v), 1);
            for (int j = 0; j < m.dim(v); ++j)
                e.set(j, 0, f.kind == Field::Kind::PrimeField
                                ? mpq_class(static_cast<long>(rng() % f.p))
                                : mpq_class(static_cast<long>(rng() % 7) - 3));
            gens.push_back({v, e});
        }
    for (const auto& [v, x] : gens) {
        if (x.is_zero()) continue;
        SubQuotient u = cyclic_submodule(m, v, x);
        if (u.rep.is_zero() || u.rep.total_dim() == m.total_dim()) continue;
        if (top(u.rep).rep.total_dim() != 1) continue;  // want a local summand
        // retraction rho with rho o incl = id
        auto h = hom_basis(m, u.rep);
        if (h.empty()) continue;
        std::size_t flat = 0;
        for (int w = 0; w < m.algebra()->num_vertices(); ++w)
            flat += static_cast<std::size_t>(u.rep.dim(w)) * u.rep.dim(w);
        Matrix a = Matrix::zero(f, flat, 0);
        for (const auto& hi : h) a = a.hstack(flatten_map(compose(hi, u.map)));
        auto sol = solve_right(a, flatten_map(ModuleMap::identity(u.rep)));
        if (!sol) continue;
        ModuleMap rho = ModuleMap::zero(m, u.rep);
        for (std::size_t i = 0; i < h.size(); ++i)
            if (sol->at(i, 0) != 0) rho = add(rho, scale(sol->at(i, 0), h[i]));
        out.push_back(u.rep);  // local, hence indecomposable
        split(kernel(rho).rep, rng, out);
        return;
    }

    throw DecompositionInconclusive("no splitting strategy applied");
}

}  // namespace

SubQuotient cyclic_submodule(const Representation& m, int vertex, const Matrix& column) {
    auto alg = m.algebra();
    int nv = alg->num_vertices();
    std::vector<Matrix> incl;
    std::vector<int> dims(nv, 0);
    for (int w = 0; w < nv; ++w) {
        Matrix span = Matrix::zero(alg->field(), m.dim(w), 0);
        for (int bi : alg->basis_between(vertex, w))
            span = span.hstack(m.evaluate(alg->basis()[bi]) * column);
        incl.push_back(column_space_basis(span));
        dims[w] = static_cast<int>(incl[w].cols());
    }
    std::vector<Matrix> maps;
    const Quiver& q = alg->quiver();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto x = solve_right(incl[q.arrows[a].tgt], m.arrow_map(a) * incl[q.arrows[a].src]);
        if (!x) throw Error("cyclic submodule is not closed under the arrow action");
        maps.push_back(*x);
    }
    SubQuotient out;
    out.rep = Representation(alg, dims, std::move(maps));
    out.map = ModuleMap(out.rep, m, std::move(incl));
    return out;
}

std::vector<Representation> decompose(const Representation& m, std::uint64_t seed) {
    const Field& f = m.algebra()->field();
    if (f.kind == Field::Kind::PrimeField && f.p <= m.total_dim())
        throw FieldTooSmall("splitting needs the field order to exceed the module dimension");
    std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
    std::vector<Representation> out;
    split(m, rng, out);
    std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
        return a.sort_key() < b.sort_key();
    });
    std::size_t total = 0;
    for (const auto& s : out) total += s.total_dim();
    if (total != m.total_dim()) throw Error("summand dimensions do not add up");
    return out;
}

std::vector<std::pair<Representation, int>> decompose_grouped(const Representation& m,
                                                              std::uint64_t seed) {
    std::vector<std::pair<Representation, int>> out;
    for (const auto& s : decompose(m, seed)) {
        bool found = false;
        for (auto& [rep, mult] : out)
            if (is_isomorphic(rep, s, seed)) {
                ++mult;
                found = true;
                break;
            }
        if (!found) out.push_back({s, 1});
    }
    return out;
}

}  // namespace opext
