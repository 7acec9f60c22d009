#pragma once

#include <compare>
#include <string>
#include <vector>

#include "opext/errors.hpp"
#include "opext/field.hpp"

namespace opext {

struct Arrow {
    std::string id;
    int src = 0;
    int tgt = 0;

    bool operator==(const Arrow&) const = default;
};

// Finite quiver; vertices and arrows are referenced by index everywhere,
// names only matter at the file-format boundary.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    void validate() const;

    bool operator==(const Quiver&) const = default;
};

// A path in the quiver; arrows are traversed left to right, so
// arrows[0] starts at source. An empty arrow list is the lazy path e_v.
struct Path {
    int source = 0;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    int target(const Quiver& q) const { return arrows.empty() ? source : q.arrows[arrows.back()].tgt; }
    bool composable_with(const Path& next, const Quiver& q) const { return target(q) == next.source; }
    Path then(const Path& next) const;
    Path reversed(const Quiver& q, const Quiver& opposite_q) const;

    bool operator==(const Path&) const = default;
};

// Length-then-lexicographic path order; the term order of the rewriting
// system. Ties between parallel classes are broken by source vertex.
std::strong_ordering path_order(const Path& a, const Path& b);

struct PathTerm {
    mpq_class coeff;
    Path path;
};

// Sorted (descending in path_order) list of terms with nonzero coefficients.
using PathCombo = std::vector<PathTerm>;

PathCombo combo_normalize(PathCombo terms, const FieldOps& ops);
PathCombo combo_add(const PathCombo& a, const PathCombo& b, const FieldOps& ops);
PathCombo combo_scale(const PathCombo& a, const mpq_class& c, const FieldOps& ops);

struct Relation {
    PathCombo terms;

    // Paths must be pairwise parallel, composable, of length >= 2.
    void validate(const Quiver& q) const;
};

}  // namespace opext
