#include "opext/enumerate.hpp"

#include <algorithm>

namespace opext {

namespace {

// Order of vertices along the underlying path, or empty if the underlying
// graph is not a simple path.
std::vector<int> path_vertex_order(const Quiver& q) {
    int n = static_cast<int>(q.vertices.size());
    std::vector<std::vector<int>> adj(n);
    if (static_cast<int>(q.arrows.size()) != n - 1) return {};
    for (const auto& a : q.arrows) {
        if (a.src == a.tgt) return {};
        adj[a.src].push_back(a.tgt);
        adj[a.tgt].push_back(a.src);
    }
    if (n == 1) return {0};
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() > 2 || adj[v].empty()) return {};
        if (adj[v].size() == 1 && start < 0) start = v;
    }
    if (start < 0) return {};
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        if (next < 0) return {};
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (seen[v]) return {};
        seen[v] = 1;
    }
    return order;
}

std::vector<Representation> interval_modules(const AlgebraPtr& alg) {
    const Quiver& q = alg->quiver();
    std::vector<int> order = path_vertex_order(q);
    int n = static_cast<int>(order.size());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<Representation> out;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            bool valid = true;
            for (const auto& r : alg->relations()) {
                const Path& p = r.terms.front().path;
                bool inside = true;
                for (int ar : p.arrows) {
                    int ps = pos[q.arrows[ar].src], pt = pos[q.arrows[ar].tgt];
                    if (ps < a || ps > b || pt < a || pt > b) inside = false;
                }
                if (inside) valid = false;
            }
            if (!valid) continue;
            std::vector<int> dims(n, 0);
            for (int k = a; k <= b; ++k) dims[order[k]] = 1;
            std::vector<Matrix> maps;
            for (const auto& ar : q.arrows) {
                Matrix m = Matrix::zero(alg->field(), dims[ar.tgt], dims[ar.src]);
                if (dims[ar.src] == 1 && dims[ar.tgt] == 1) m.set(0, 0, 1);
                maps.push_back(std::move(m));
            }
            out.push_back(Representation(alg, std::move(dims), std::move(maps)));
        }
    return out;
}

}  // namespace

bool has_interval_classification(const Algebra& alg) {
    if (path_vertex_order(alg.quiver()).empty()) return false;
    for (const auto& r : alg.relations())
        if (r.terms.size() != 1) return false;
    return true;
}

std::vector<Representation> enumerate_indecomposables_bruteforce(const AlgebraPtr& alg,
                                                                 int total_dim_bound,
                                                                 std::uint64_t budget) {
    const Field& f = alg->field();
    if (f.kind != Field::Kind::PrimeField)
        throw SearchBudgetExceeded("the exhaustive module search needs a finite field");
    int nv = alg->num_vertices();
    const Quiver& q = alg->quiver();
    std::uint64_t used = 0;

    std::vector<Representation> classes;  // all iso classes, total dim ascending
    std::vector<std::vector<int>> dimvec{std::vector<int>(nv, 0)};
    // enumerate dimension vectors grouped by total
    for (int total = 1; total <= total_dim_bound; ++total) {
        std::vector<std::vector<int>> dvs;
        std::vector<int> cur(nv, 0);
        std::function<void(int, int)> rec = [&](int v, int left) {
            if (v == nv) {
                if (left == 0) dvs.push_back(cur);
                return;
            }
            for (int d = 0; d <= left; ++d) {
                cur[v] = d;
                rec(v + 1, left - d);
            }
            cur[v] = 0;
        };
        rec(0, total);

        for (const auto& dims : dvs) {
            std::size_t entries = 0;
            for (const auto& a : q.arrows)
                entries += static_cast<std::size_t>(dims[a.tgt]) * dims[a.src];
            double count = 1;
            for (std::size_t i = 0; i < entries && count <= 2.0 * budget; ++i)
                count *= static_cast<double>(f.p);
            if (used + count > budget)
                throw SearchBudgetExceeded("module search budget exhausted");
            used += static_cast<std::uint64_t>(count);

            std::vector<unsigned long> digits(entries, 0);
            while (true) {
                std::vector<Matrix> maps;
                std::size_t k = 0;
                for (const auto& a : q.arrows) {
                    Matrix m = Matrix::zero(f, dims[a.tgt], dims[a.src]);
                    for (std::size_t r = 0; r < m.rows(); ++r)
                        for (std::size_t c = 0; c < m.cols(); ++c)
                            m.set(r, c, mpq_class(static_cast<long>(digits[k++])));
                    maps.push_back(std::move(m));
                }
                try {
                    Representation rep(alg, dims, std::move(maps));
                    bool fresh = true;
                    for (const auto& cl : classes)
                        if (cl.dims() == rep.dims() && is_isomorphic(cl, rep, 1)) {
                            fresh = false;
                            break;
                        }
                    if (fresh) classes.push_back(std::move(rep));
                } catch (const RelationViolation&) {
                }
                std::size_t i = 0;
                while (i < entries) {
                    if (++digits[i] == f.p)
                        digits[i++] = 0;
                    else
                        break;
                }
                if (entries == 0 || i == entries) break;
            }
        }
    }

    std::vector<Representation> indec;
    for (const auto& m : classes) {
        bool splits = false;
        for (std::size_t i = 0; i < classes.size() && !splits; ++i) {
            if (classes[i].total_dim() >= m.total_dim()) continue;
            for (std::size_t j = i; j < classes.size() && !splits; ++j) {
                if (classes[i].total_dim() + classes[j].total_dim() != m.total_dim()) continue;
                std::vector<int> sum(nv, 0);
                for (int v = 0; v < nv; ++v) sum[v] = classes[i].dim(v) + classes[j].dim(v);
                if (sum != m.dims()) continue;
                if (is_isomorphic(m, direct_sum({classes[i], classes[j]}).sum, 1)) splits = true;
            }
        }
        if (!splits) indec.push_back(m);
    }
    std::sort(indec.begin(), indec.end(),
              [](const Representation& a, const Representation& b) { return a.sort_key() < b.sort_key(); });
    return indec;
}

std::vector<Representation> enumerate_indecomposables(const AlgebraPtr& alg, int total_dim_bound,
                                                      std::uint64_t budget) {
    if (has_interval_classification(*alg)) {
        auto out = interval_modules(alg);
        std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
            return a.sort_key() < b.sort_key();
        });
        return out;
    }
    return enumerate_indecomposables_bruteforce(alg, total_dim_bound, budget);
}

}  // namespace opext
