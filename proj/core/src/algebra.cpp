#include "opext/algebra.hpp"

#include <algorithm>
#include <queue>

namespace opext {

namespace {
constexpr std::size_t kMaxRules = 4096;

Path subpath(const Path& p, const Quiver& q, std::size_t off, std::size_t len) {
    Path s;
    s.arrows.assign(p.arrows.begin() + off, p.arrows.begin() + off + len);
    s.source = len == 0 ? (off == 0 ? p.source : q.arrows[p.arrows[off - 1]].tgt)
                        : q.arrows[s.arrows.front()].src;
    return s;
}
}  // namespace

Algebra Algebra::build(Field field, Quiver quiver, std::vector<Relation> relations,
                       std::size_t max_path_length) {
    if (max_path_length < 1) throw ParseError("max_path_length must be >= 1");
    quiver.validate();
    Algebra a;
    a.field_ = field;
    a.quiver_ = std::move(quiver);
    a.bound_ = max_path_length;
    FieldOps ops(field);
    for (auto& r : relations) {
        r.validate(a.quiver_);
        r.terms = combo_normalize(r.terms, ops);
    }
    std::erase_if(relations, [](const Relation& r) { return r.terms.empty(); });
    a.relations_ = std::move(relations);
    a.complete();
    a.enumerate_basis();
    return a;
}

bool Algebra::find_redex(const Path& p, std::size_t& offset, std::size_t& rule) const {
    for (std::size_t off = 0; off < p.length(); ++off)
        for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
            const Path& lead = rules_[ri].lead;
            if (lead.length() == 0 || off + lead.length() > p.length()) continue;
            if (std::equal(lead.arrows.begin(), lead.arrows.end(), p.arrows.begin() + off)) {
                offset = off;
                rule = ri;
                return true;
            }
        }
    return false;
}

PathCombo Algebra::reduce(const Path& p) const {
    FieldOps ops(field_);
    PathCombo result;
    std::vector<PathTerm> work{{mpq_class(1), p}};
    while (!work.empty()) {
        PathTerm t = work.back();
        work.pop_back();
        std::size_t off = 0, ri = 0;
        if (!find_redex(t.path, off, ri)) {
            result.push_back(t);
            continue;
        }
        const Rule& r = rules_[ri];
        Path head = subpath(t.path, quiver_, 0, off);
        Path tail = subpath(t.path, quiver_, off + r.lead.length(),
                            t.path.length() - off - r.lead.length());
        for (const auto& rt : r.rhs)
            work.push_back({ops.mul(t.coeff, rt.coeff), head.then(rt.path).then(tail)});
    }
    return combo_normalize(std::move(result), ops);
}

PathCombo Algebra::reduce(const PathCombo& c) const {
    FieldOps ops(field_);
    PathCombo out;
    for (const auto& t : c) out = combo_add(out, combo_scale(reduce(t.path), t.coeff, ops), ops);
    return out;
}

PathCombo Algebra::multiply(const Path& p, const Path& q) const {
    if (!p.composable_with(q, quiver_)) return {};
    return reduce(p.then(q));
}

bool Algebra::add_rule_from(PathCombo combo) {
    FieldOps ops(field_);
    combo = reduce(combo);
    if (combo.empty()) return false;
    Rule r;
    r.lead = combo.front().path;
    mpq_class lc = combo.front().coeff;
    combo.erase(combo.begin());
    r.rhs = combo_scale(combo, ops.neg(ops.inv(lc)), ops);
    if (r.lead.length() < 1) throw NonConfluent("rewriting produced a unit relation; ideal not admissible");
    rules_.push_back(std::move(r));
    if (rules_.size() > kMaxRules) throw NonConfluent("completion exceeded the rule budget");
    return true;
}

void Algebra::complete() {
    FieldOps ops(field_);
    for (const auto& rel : relations_) add_rule_from(rel.terms);

    // Critical pairs: proper suffix/prefix overlaps and inclusions,
    // restricted to words of length <= bound.
    bool changed = true;
    std::size_t rounds = 0;
    while (changed) {
        if (++rounds > kMaxRules) throw NonConfluent("completion did not stabilize");
        changed = false;
        std::size_t n = rules_.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rule ri = rules_[i];
                const Rule rj = rules_[j];
                std::size_t li = ri.lead.length(), lj = rj.lead.length();
                // Suffix of lead_i == prefix of lead_j.
                for (std::size_t k = 1; k < std::min(li, lj); ++k) {
                    if (!std::equal(ri.lead.arrows.end() - k, ri.lead.arrows.end(),
                                    rj.lead.arrows.begin()))
                        continue;
                    if (li + lj - k > bound_) continue;
                    Path head = subpath(ri.lead, quiver_, 0, li - k);
                    Path tail = subpath(rj.lead, quiver_, k, lj - k);
                    PathCombo x;  // rewrite via rule i
                    for (const auto& t : ri.rhs) x.push_back({t.coeff, t.path.then(tail)});
                    PathCombo y;  // rewrite via rule j
                    for (const auto& t : rj.rhs) y.push_back({t.coeff, head.then(t.path)});
                    PathCombo diff = combo_add(reduce(combo_normalize(std::move(x), ops)),
                                               combo_scale(reduce(combo_normalize(std::move(y), ops)),
                                                           -1, ops),
                                               ops);
                    if (add_rule_from(diff)) changed = true;
                }
                // lead_j properly inside lead_i.
                if (i != j && lj < li) {
                    for (std::size_t off = 0; off + lj <= li; ++off) {
                        if (!std::equal(rj.lead.arrows.begin(), rj.lead.arrows.end(),
                                        ri.lead.arrows.begin() + off))
                            continue;
                        Path head = subpath(ri.lead, quiver_, 0, off);
                        Path tail = subpath(ri.lead, quiver_, off + lj, li - off - lj);
                        PathCombo y;
                        for (const auto& t : rj.rhs) y.push_back({t.coeff, head.then(t.path).then(tail)});
                        PathCombo diff = combo_add(reduce(ri.rhs),
                                                   combo_scale(reduce(combo_normalize(std::move(y), ops)),
                                                               -1, ops),
                                                   ops);
                        if (add_rule_from(diff)) changed = true;
                    }
                }
            }
    }
}

void Algebra::enumerate_basis() {
    basis_.clear();
    basis_index_.clear();
    std::vector<Path> frontier;
    for (int v = 0; v < num_vertices(); ++v) frontier.push_back(Path{v, {}});
    std::vector<Path> all;
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const auto& p : frontier) {
            if (p.length() >= bound_)
                throw NotAdmissible("irreducible path of length " + std::to_string(p.length()) +
                                    " at the declared nilpotency bound; algebra may be infinite-dimensional");
            all.push_back(p);
            int t = p.target(quiver_);
            for (std::size_t ai = 0; ai < quiver_.arrows.size(); ++ai) {
                if (quiver_.arrows[ai].src != t) continue;
                Path q = p;
                q.arrows.push_back(static_cast<int>(ai));
                std::size_t off = 0, ri = 0;
                if (!find_redex(q, off, ri)) next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(),
              [](const Path& a, const Path& b) { return path_order(a, b) < 0; });
    basis_ = std::move(all);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        basis_index_[{basis_[i].source, basis_[i].arrows}] = static_cast<int>(i);
}

int Algebra::basis_index(const Path& p) const {
    auto it = basis_index_.find({p.source, p.arrows});
    return it == basis_index_.end() ? -1 : it->second;
}

Algebra Algebra::opposite() const {
    Quiver oq;
    oq.vertices = quiver_.vertices;
    for (const auto& a : quiver_.arrows) oq.arrows.push_back({a.id, a.tgt, a.src});
    std::vector<Relation> orels;
    for (const auto& r : relations_) {
        Relation o;
        for (const auto& t : r.terms) o.terms.push_back({t.coeff, t.path.reversed(quiver_, oq)});
        orels.push_back(std::move(o));
    }
    return build(field_, std::move(oq), std::move(orels), bound_);
}

std::vector<int> Algebra::basis_from(int v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].source == v) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> Algebra::basis_between(int v, int w) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].source == v && basis_[i].target(quiver_) == w) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<std::vector<int>> Algebra::projective_dims() const {
    int n = num_vertices();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
    for (const auto& p : basis_) d[p.source][p.target(quiver_)]++;
    return d;
}

bool Algebra::same_presentation(const Algebra& o) const {
    if (!(field_ == o.field_) || !(quiver_ == o.quiver_)) return false;
    if (basis_.size() != o.basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!(basis_[i] == o.basis_[i])) return false;
    return true;
}

}  // namespace opext
