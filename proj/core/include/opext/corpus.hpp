#pragma once

#include "opext/extension.hpp"
#include "opext/formats.hpp"

namespace opext::corpus {

// Shipped base algebras: "a2" (linear 1->2), "a3" (linear 1->2->3), and
// "abzero" (1->2->3 with the length-two path a.b = 0).
std::vector<std::string> names();
std::string quiver_text(const std::string& name);  // canonical .quiver over Q
AlgebraPtr algebra(const std::string& name, Field f = Field::rationals());

// Shipped one-point extensions: "a2-ext-p1", "a2-ext-p2", "abzero-ext-p1".
struct ExtensionSpec {
    std::string name;
    std::string base;
    std::vector<int> p0;  // multiplicities per base vertex
};
std::vector<ExtensionSpec> extensions();
ExtensionContext extension(const std::string& name, Field f = Field::rationals());

// Every corpus algebra: the three bases followed by the three extended
// algebras, in declaration order.
std::vector<AlgebraPtr> all_algebras(Field f = Field::rationals());

}  // namespace opext::corpus
