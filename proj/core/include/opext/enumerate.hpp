#pragma once

#include "opext/homology.hpp"

namespace opext {

// True when the underlying graph of the quiver is a simple path and every
// relation is a single scaled path; over such algebras the indecomposables
// are exactly the valid interval modules.
bool has_interval_classification(const Algebra& alg);

// All indecomposables up to isomorphism, sorted deterministically.
// Uses the interval classification when it applies (exhaustive, any field,
// any total dimension); otherwise falls back to a brute-force search over a
// prime field of all modules of total dimension <= total_dim_bound.
// The fallback counts candidate matrix tuples against `budget` and throws
// SearchBudgetExceeded when it runs out.
std::vector<Representation> enumerate_indecomposables(const AlgebraPtr& alg, int total_dim_bound,
                                                      std::uint64_t budget = 5'000'000);

// The brute-force path, exposed separately so it can serve as an oracle
// for the closed form.
std::vector<Representation> enumerate_indecomposables_bruteforce(const AlgebraPtr& alg,
                                                                 int total_dim_bound,
                                                                 std::uint64_t budget);

}  // namespace opext
