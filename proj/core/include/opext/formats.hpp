#pragma once

#include "opext/rep.hpp"

namespace opext {

// Line-oriented UTF-8 presentation file:
//   # comment
//   field Q            (or: field F <p>)
//   vertex <id>
//   arrow <id> <src> <tgt>
//   relation <coeff>*<a.b.c> [+ <coeff>*<...>] [- ...]
// Vertices and arrows are referenced by name; coefficients are rationals
// written p/q. Throws ParseError with the offending line number.
struct QuiverFile {
    Field field = Field::rationals();
    Quiver quiver;
    std::vector<Relation> relations;
};

QuiverFile parse_quiver_text(const std::string& text);
AlgebraPtr algebra_from_text(const std::string& text, std::size_t max_path_length = 12);

// Canonical re-serialization; parse(serialize(a)) reproduces the same
// presentation, and the fingerprint is the FNV-1a hash of these bytes.
std::string serialize_algebra(const Algebra& a);
std::string algebra_fingerprint(const Algebra& a);

// Module file:
//   module over <algebra-fingerprint>
//   dim <vertex>=<n>
//   map <arrow> = [[row],[row],...]
// Rows use rationals p/q; loading validates shapes and that every defining
// relation acts by zero (RelationViolation).
Representation parse_rep_text(const std::string& text, const AlgebraPtr& alg);
std::string serialize_rep(const Representation& m);

std::string read_text_file(const std::string& path);  // ParseError when unreadable

}  // namespace opext
