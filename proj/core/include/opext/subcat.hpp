#pragma once

#include "opext/homology.hpp"

namespace opext {

// An additively closed subcategory at representation-finite scale: the
// add-closure of finitely many pairwise non-isomorphic indecomposables.
struct SubcatSample {
    AlgebraPtr algebra;
    std::vector<Representation> generators;

    Representation sum_of_generators() const;  // zero module when empty
};

// Deduplicate by isomorphism; generators assumed indecomposable.
SubcatSample subcat_from_indecomposables(AlgebraPtr alg, std::vector<Representation> gens,
                                         std::uint64_t seed);
// Decompose arbitrary modules first, then deduplicate.
SubcatSample subcat_from_modules(AlgebraPtr alg, const std::vector<Representation>& mods,
                                 std::uint64_t seed);

// Largest submodule of m generated by the subcategory: the sum of images
// of all maps from generators into m.
SubQuotient trace(const SubcatSample& t, const Representation& m);

bool in_gen(const SubcatSample& t, const Representation& m);    // trace = m
bool in_cogen(const SubcatSample& t, const Representation& m);  // reject = 0
// Identity of m factors through add of the generators.
bool in_add(const SubcatSample& t, const Representation& m);

// Universal maps built from Hom-space bases:
// left: m -> oplus_i T_i^{dim Hom(m, T_i)}; right: oplus_i T_i^{dim Hom(T_i, m)} -> m.
ModuleMap left_approximation(const SubcatSample& t, const Representation& m);
ModuleMap right_approximation(const SubcatSample& t, const Representation& m);

}  // namespace opext
