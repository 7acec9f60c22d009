#pragma once

#include <map>
#include <vector>

#include "opext/quiver.hpp"

namespace opext {

// A bounded path algebra kQ/I presented by a confluent rewriting system
// under the length-then-lex path order, completed up to a length bound.
// The path basis is the set of irreducible paths; immutable once built.
class Algebra {
public:
    static Algebra build(Field field, Quiver quiver, std::vector<Relation> relations,
                         std::size_t max_path_length);

    const Field& field() const { return field_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t bound() const { return bound_; }

    const std::vector<Path>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    int num_vertices() const { return static_cast<int>(quiver_.vertices.size()); }

    // Index of an irreducible path in the basis, or -1.
    int basis_index(const Path& p) const;

    PathCombo reduce(const Path& p) const;
    PathCombo reduce(const PathCombo& c) const;
    // Reduced product p.q (traverse p first); empty combo when not composable.
    PathCombo multiply(const Path& p, const Path& q) const;

    Algebra opposite() const;

    // Basis indices of paths with the given source (and target).
    std::vector<int> basis_from(int v) const;
    std::vector<int> basis_between(int v, int w) const;
    // dims[v][w] = dim of e_w P_v = number of basis paths v -> w.
    std::vector<std::vector<int>> projective_dims() const;

    bool same_presentation(const Algebra& o) const;

private:
    struct Rule {
        Path lead;
        PathCombo rhs;
    };

    Field field_ = Field::rationals();
    Quiver quiver_;
    std::vector<Relation> relations_;
    std::size_t bound_ = 0;
    std::vector<Rule> rules_;
    std::vector<Path> basis_;
    std::map<std::pair<int, std::vector<int>>, int> basis_index_;

    bool find_redex(const Path& p, std::size_t& offset, std::size_t& rule) const;
    void complete();
    void enumerate_basis();
    bool add_rule_from(PathCombo combo);
};

}  // namespace opext
