#pragma once

#include <memory>

#include "opext/algebra.hpp"

namespace opext {

using AlgebraPtr = std::shared_ptr<const Algebra>;

// The pairing (B, P0, A) for a one-point extension A = B[P0].
// The extended quiver keeps the base vertices first (same order) and adds
// the fresh source vertex omega last, with one arrow omega -> i per copy
// of P_i in P0.
struct ExtensionContext {
    AlgebraPtr base;
    std::vector<int> p0_multiplicities;  // per base vertex
    AlgebraPtr extended;
    int omega = 0;  // vertex index in `extended`

    struct NewArrow {
        int arrow;        // arrow index in `extended`
        int base_vertex;  // target, as a base vertex index
        int copy;         // which copy of P_{base_vertex}
    };
    std::vector<NewArrow> new_arrows;

    std::size_t p0_dim() const;
    // Dimension vector of P0 over the base algebra.
    std::vector<int> p0_dims() const;
};

ExtensionContext one_point_extension(const AlgebraPtr& base, const std::vector<int>& p0_multiplicities);

// Recover the extension context from an extended algebra and its
// extension vertex (which must be a source with no relations through it).
ExtensionContext context_from_extended(const AlgebraPtr& extended, int omega);

}  // namespace opext
