#pragma once

#include <optional>
#include <random>

#include "opext/rep.hpp"

namespace opext {

// Basis of Hom(M, N), deterministic order.
std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

struct SubQuotient {
    Representation rep;
    ModuleMap map;  // inclusion for sub/kernel/image, projection for quotients
};

SubQuotient kernel(const ModuleMap& f);
SubQuotient image(const ModuleMap& f);
SubQuotient cokernel(const ModuleMap& f);

Representation simple_module(const AlgebraPtr& alg, int v);
Representation projective_module(const AlgebraPtr& alg, int v);
Representation injective_module(const AlgebraPtr& alg, int v);

SubQuotient radical(const Representation& m);
SubQuotient top(const Representation& m);
SubQuotient socle(const Representation& m);

// P = oplus_c P_{vertices[c]}, with the path basis bookkeeping needed to
// translate between matrices of maps and their path-combination entries.
struct ProjectiveSum {
    Representation rep;
    std::vector<int> vertices;  // source vertex of each indecomposable copy
    // Per quiver vertex w: the (copy, path) pairs forming the basis at w,
    // in the coordinate order used by rep.
    std::vector<std::vector<std::pair<int, Path>>> basis;

    int index_of(int w, int copy, const Path& p) const;
};

ProjectiveSum projective_sum(const AlgebraPtr& alg, const std::vector<int>& vertices);

struct ProjectiveCover {
    ProjectiveSum p;
    ModuleMap cover;  // p.rep ->> m
};
ProjectiveCover projective_cover(const Representation& m);

bool is_projective(const Representation& m);
bool is_injective_module(const Representation& m);

// Minimal projective presentation P1 --d--> P0 ->> M with the syzygy
// Omega = ker(P0 ->> M) and d written out entrywise as path combinations:
// entry (i, j) lies in span{paths p0.vertices[i] -> p1.vertices[j]} and
// gives the component P1_j -> P0_i.
struct ProjPresentation {
    Representation target;
    ProjectiveSum p0;
    ModuleMap cover;       // P0 ->> M
    Representation omega;  // ker(cover)
    ModuleMap omega_incl;  // Omega -> P0
    ProjectiveSum p1;
    ModuleMap d;  // P1 -> P0
    std::vector<std::vector<PathCombo>> algebra_matrix;
};
ProjPresentation minimal_projective_presentation(const Representation& m);

// The map oplus_j P_{src.vertices[j]} -> oplus_i P_{dst.vertices[i]} whose
// (i, j) component is right multiplication by entries[i][j], a combination
// of paths dst.vertices[i] -> src.vertices[j].
ModuleMap map_between_projective_sums(const ProjectiveSum& src, const ProjectiveSum& dst,
                                      const std::vector<std::vector<PathCombo>>& entries);

// Recover the path-combination entries of a map between projective sums.
std::vector<std::vector<PathCombo>> algebra_matrix_of(const ModuleMap& d, const ProjectiveSum& src,
                                                      const ProjectiveSum& dst);

// Memoized structural opposite; applying it twice returns the original
// pointer, so duals of duals land over the same algebra object.
AlgebraPtr opposite_of(const AlgebraPtr& alg);

// Standard k-linear dual, contravariant: a module over the opposite algebra.
Representation dual(const Representation& m);

// Auslander-Reiten translate D Tr; zero for projectives.
Representation tau(const Representation& m);

struct ExtSpace {
    std::size_t dim = 0;
    // For degree 0 a hom basis M -> N; for degree >= 1 cocycle
    // representatives Omega^{degree-1 -> via the minimal presentation}:
    // maps from the relevant syzygy to N.
    std::vector<ModuleMap> representatives;
};
ExtSpace ext_space(int degree, const Representation& m, const Representation& n);
std::size_t ext_dim(int degree, const Representation& m, const Representation& n);

// nullopt means no projective resolution terminated within the cap,
// reported as infinite.
std::optional<int> projective_dimension(const Representation& m);

std::optional<ModuleMap> find_isomorphism(const Representation& m, const Representation& n,
                                          std::uint64_t seed);
bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed);

// 0 -> incl.source() -> incl.target() = proj.source() -> proj.target() -> 0
struct ShortExact {
    ModuleMap incl;
    ModuleMap proj;
};
void validate_ses(const ShortExact& s);

// Fixed coordinates on Ext^1(X, Y): cocycle representatives Omega_X -> Y
// modulo the coboundaries coming from Hom(P0, Y).
struct Ext1Setup {
    Representation x, y;
    ProjPresentation pres;  // of x
    std::vector<ModuleMap> cocycles;
    Matrix cocycle_flats;    // columns flatten(cocycles[i])
    Matrix coboundary_flats;  // independent columns spanning the coboundaries
};
Ext1Setup ext1_setup(const Representation& x, const Representation& y);

// The pushout extension of X by Y along sum_i coeffs[i] * cocycles[i].
ShortExact realize_ext1(const Ext1Setup& setup, const std::vector<mpq_class>& coeffs);

// Coordinates of the class of a short exact sequence 0 -> Y -> E -> X -> 0
// in the chosen cocycle basis.
std::vector<mpq_class> classify_ext1(const Ext1Setup& setup, const ShortExact& ses);

// Cokernel of a random map between small random projective sums.
Representation random_module(const AlgebraPtr& alg, std::mt19937_64& rng);

}  // namespace opext
