#include "opext/quiver.hpp"

#include <algorithm>
#include <set>

namespace opext {

int Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    throw UnknownVertex("unknown vertex '" + name + "'");
}

int Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == name) return static_cast<int>(i);
    throw ParseError("unknown arrow '" + name + "'");
}

void Quiver::validate() const {
    std::set<std::string> ids(vertices.begin(), vertices.end());
    if (ids.size() != vertices.size()) throw ParseError("duplicate vertex identifier");
    std::set<std::string> aids;
    for (const auto& a : arrows) {
        if (!aids.insert(a.id).second) throw ParseError("duplicate arrow identifier '" + a.id + "'");
        if (ids.count(a.id)) throw ParseError("arrow id collides with vertex id '" + a.id + "'");
        if (a.src < 0 || a.src >= static_cast<int>(vertices.size()) || a.tgt < 0 ||
            a.tgt >= static_cast<int>(vertices.size()))
            throw UnknownVertex("arrow '" + a.id + "' references an undeclared vertex");
    }
}

Path Path::then(const Path& next) const {
    Path p = *this;
    p.arrows.insert(p.arrows.end(), next.arrows.begin(), next.arrows.end());
    return p;
}

Path Path::reversed(const Quiver& q, const Quiver&) const {
    Path r;
    r.source = target(q);
    r.arrows.assign(arrows.rbegin(), arrows.rend());
    return r;
}

std::strong_ordering path_order(const Path& a, const Path& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (auto c = a.arrows <=> b.arrows; c != 0) return c;
    return a.source <=> b.source;
}

PathCombo combo_normalize(PathCombo terms, const FieldOps& ops) {
    std::sort(terms.begin(), terms.end(),
              [](const PathTerm& x, const PathTerm& y) { return path_order(x.path, y.path) > 0; });
    PathCombo out;
    for (auto& t : terms) {
        mpq_class c = ops.canon(t.coeff);
        if (!out.empty() && out.back().path == t.path)
            out.back().coeff = ops.add(out.back().coeff, c);
        else
            out.push_back({c, t.path});
    }
    std::erase_if(out, [](const PathTerm& t) { return t.coeff == 0; });
    return out;
}

PathCombo combo_add(const PathCombo& a, const PathCombo& b, const FieldOps& ops) {
    PathCombo s = a;
    s.insert(s.end(), b.begin(), b.end());
    return combo_normalize(std::move(s), ops);
}

PathCombo combo_scale(const PathCombo& a, const mpq_class& c, const FieldOps& ops) {
    PathCombo s;
    for (const auto& t : a) {
        mpq_class x = ops.mul(t.coeff, c);
        if (x != 0) s.push_back({x, t.path});
    }
    return s;
}

void Relation::validate(const Quiver& q) const {
    if (terms.empty()) throw ParseError("empty relation");
    int src = terms.front().path.source;
    int tgt = terms.front().path.target(q);
    for (const auto& t : terms) {
        if (t.path.length() < 2) throw ParseError("relation paths must have length >= 2");
        if (t.path.source != src || t.path.target(q) != tgt)
            throw ParseError("relation paths must be parallel");
        int at = t.path.source;
        for (int a : t.path.arrows) {
            if (q.arrows[a].src != at) throw ParseError("non-composable path in relation");
            at = q.arrows[a].tgt;
        }
    }
}

}  // namespace opext
