#pragma once

#include "opext/homology.hpp"

namespace opext {

// Indecomposable direct summands, with repeats for multiplicity.
// Layered strategy: obvious leaves (simple top or socle, trivial
// endomorphism ring), Fitting splits along random endomorphisms and
// rational eigenvalues, and retractions onto cyclic local submodules.
// Throws FieldTooSmall over F_p with p <= dim M, and
// DecompositionInconclusive when every layer fails.
std::vector<Representation> decompose(const Representation& m, std::uint64_t seed);

// Convenience: group the summands into (representative, multiplicity)
// pairs up to isomorphism.
std::vector<std::pair<Representation, int>> decompose_grouped(const Representation& m,
                                                              std::uint64_t seed);

// The submodule generated by one vector at one vertex, with its inclusion.
SubQuotient cyclic_submodule(const Representation& m, int vertex, const Matrix& column);

}  // namespace opext
