#pragma once

#include "opext/extension.hpp"
#include "opext/matrix.hpp"

namespace opext {

// A finite-dimensional left module over a bound path algebra, given as a
// quiver representation: a dimension per vertex and one matrix per arrow.
// For an arrow a: s -> t the matrix has shape dims[t] x dims[s], and a path
// acts by composing its arrow matrices right-to-left (first arrow applied
// first).
class Representation {
public:
    Representation() = default;
    Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> arrow_maps);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    const std::vector<Matrix>& arrow_maps() const { return maps_; }
    const Matrix& arrow_map(int a) const { return maps_[a]; }

    std::size_t total_dim() const;
    bool is_zero() const;

    // Matrix of the action of a path (dims[target] x dims[source]).
    Matrix evaluate(const Path& p) const;
    // Matrix of a linear combination of parallel paths src -> tgt.
    Matrix evaluate(const PathCombo& c, int src, int tgt) const;

    // Shape checks plus: every defining relation of the algebra acts by zero.
    void validate() const;

    // Deterministic tie-break key (dims then matrix entries).
    std::string sort_key() const;

    static Representation zero(AlgebraPtr alg);

private:
    AlgebraPtr alg_;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

// A homomorphism of representations: one matrix per vertex, commuting with
// every arrow action.
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(Representation source, Representation target, std::vector<Matrix> vertex_maps);

    const Representation& source() const { return src_; }
    const Representation& target() const { return tgt_; }
    const std::vector<Matrix>& vertex_maps() const { return maps_; }
    const Matrix& vertex_map(int v) const { return maps_[v]; }

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const;

    // Checks shapes and the commuting squares N_a f_s = f_t M_a.
    void validate() const;

    static ModuleMap zero(const Representation& source, const Representation& target);
    static ModuleMap identity(const Representation& m);

private:
    Representation src_, tgt_;
    std::vector<Matrix> maps_;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap add(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale(const mpq_class& c, const ModuleMap& f);

struct DirectSum {
    Representation sum;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<Representation>& parts);

// Throws AlgebraMismatch unless both are over structurally equal algebras.
void require_same_algebra(const Representation& m, const Representation& n);

// Flatten all vertex matrices of a map to one column vector (fixed order),
// used to express hom-space elements in coordinates.
Matrix flatten_map(const ModuleMap& f);

}  // namespace opext
