#pragma once

#include "opext/functors.hpp"
#include "opext/subcat.hpp"

namespace opext {

struct Clause {
    std::string name;
    bool pass = true;
    bool checked = true;  // false = recorded as automatic at this scale
    std::string detail;
};

struct Verdict {
    bool pass = true;
    std::vector<Clause> clauses;

    void add(Clause c) {
        if (c.checked && !c.pass) pass = false;
        clauses.push_back(std::move(c));
    }
};

enum class TiltingMode { DefB, DefBBOS };
enum class SttMode { Def61, AIRPairs };
enum class Direction { Restrict, Extend };

// DefBBOS: rigidity, pd <= 1, and a two-term add-T coresolution of every
// indecomposable projective (built by left approximation).
// DefB: T-perp = Fac(T) as predicates over the enumerated indecomposables;
// the cogeneration and contravariant-finiteness clauses are recorded as
// automatic at representation-finite scale.
Verdict is_tilting(const SubcatSample& t, TiltingMode mode,
                   const std::vector<Representation>& indecs, std::uint64_t seed);

// Surjectivity of Hom(f, m): Hom(target(f), m) -> Hom(source(f), m).
bool hom_along_surjective(const ModuleMap& f, const Representation& m);

// Presentation clause: Hom(g_i, T_j) surjective for all generator pairs,
// where g_i is the minimal presentation map of T_i.
Verdict is_tau_rigid(const SubcatSample& t);

// Def61: tau-rigidity plus, per indecomposable projective P, an exact
// sequence P -> T0 -> T1 -> 0 through the left approximation.
// AIRPairs: Hom(T, tau T) = 0 plus the support-pair count
// |T| + #{v : T_v = 0} = #vertices.
Verdict is_support_tau_tilting(const SubcatSample& t, SttMode mode,
                               const std::vector<Representation>& indecs, std::uint64_t seed);

// sigma: the minimal projective presentation of the generator sum,
// augmented by P_v -> 0 for every vertex outside the support (the
// standard witness making D_sigma = Gen(T) testable).
struct SiltingPresentation {
    ProjPresentation pres;
    std::vector<int> cosupport;
};
SiltingPresentation silting_presentation(const SubcatSample& t);
bool d_sigma_contains(const SiltingPresentation& sigma, const Representation& m);

struct SiltingWitness {
    SiltingPresentation sigma;
    Verdict verdict;
};
SiltingWitness is_silting_findim(const SubcatSample& t, const std::vector<Representation>& indecs,
                                 const std::vector<Representation>& extra, std::uint64_t seed);

// Ext-projective in Gen(T) plus the operational Pres(T) = Gen(T) test
// (kernel of the right approximation stays in Gen); finendo recorded as
// automatic.
Verdict is_quasi_tilting_findim(const SubcatSample& t, const std::vector<Representation>& indecs,
                                std::uint64_t seed);

// zeta: minimal injective copresentation I0 -> I1 of the generator sum,
// computed by dualizing the presentation of the dual over the opposite
// algebra; augmented dually by the cosupport.
struct CosiltingPresentation {
    ModuleMap zeta;
    std::vector<int> cosupport;
};
CosiltingPresentation cosilting_presentation(const SubcatSample& t);
bool b_zeta_contains(const CosiltingPresentation& zeta, const Representation& m);
Verdict is_cosilting_findim(const SubcatSample& t, const std::vector<Representation>& indecs,
                            std::uint64_t seed);

ModuleMap dual_map(const ModuleMap& f);

struct TransportResult {
    SubcatSample image;
    Verdict verdict;
};
TransportResult transport_tilting(Direction dir, const RecollementView& rv, const SubcatSample& t,
                                  const std::vector<Representation>& target_indecs,
                                  std::uint64_t seed);
TransportResult transport_stt(Direction dir, const RecollementView& rv, const SubcatSample& t,
                              const std::vector<Representation>& target_indecs, std::uint64_t seed);

// Image sets under restrict/extend without certification.
SubcatSample transport_subcat(Direction dir, const RecollementView& rv, const SubcatSample& t,
                              std::uint64_t seed);

// Subset enumerations over the indecomposables (deterministic order).
std::vector<SubcatSample> enumerate_tilting(const AlgebraPtr& alg,
                                            const std::vector<Representation>& indecs,
                                            TiltingMode mode, std::uint64_t seed);
std::vector<SubcatSample> enumerate_stt(const AlgebraPtr& alg,
                                        const std::vector<Representation>& indecs, SttMode mode,
                                        std::uint64_t seed);
std::vector<SubcatSample> enumerate_silting(const AlgebraPtr& alg,
                                            const std::vector<Representation>& indecs,
                                            std::uint64_t seed);
std::vector<SubcatSample> enumerate_cosilting(const AlgebraPtr& alg,
                                              const std::vector<Representation>& indecs,
                                              std::uint64_t seed);

// Membership bitmap of the enumerated indecomposables in Gen(T); equality
// of these bitmaps is the equivalence of support tau-tilting objects.
std::vector<char> gen_membership(const SubcatSample& t, const std::vector<Representation>& indecs);

}  // namespace opext
