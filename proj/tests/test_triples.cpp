#include <doctest.h>

#include "opext/corpus.hpp"
#include "opext/enumerate.hpp"
#include "opext/triples.hpp"

using namespace opext;

namespace {
std::vector<int> sorted_total_dims(const SubcatSample& s) {
    std::vector<int> out;
    for (auto& g : s.generators) out.push_back(static_cast<int>(g.total_dim()));
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

TEST_CASE("triple of the projective tilting object of A_2") {
    auto a2 = corpus::algebra("a2");
    auto indecs = enumerate_indecomposables(a2, 12);
    auto t = subcat_from_indecomposables(
        a2, {projective_module(a2, 0), projective_module(a2, 1)}, 1);
    auto triple = triple_from_tilting(t, TripleKind::CotorsionTorsion, indecs, 1);
    // Gen(A) = everything, F = 0, C = the projectives (Ext^1(S_1, S_2) != 0
    // keeps S_1 out of the left perp).
    CHECK(triple.t.generators.size() == 3);
    CHECK(triple.f.generators.empty());
    CHECK(sorted_total_dims(triple.c) == std::vector<int>{1, 2});
    CHECK(verify_triple(triple, indecs, 1).pass);
}

TEST_CASE("triple of the injective tilting object of A_2") {
    auto a2 = corpus::algebra("a2");
    auto indecs = enumerate_indecomposables(a2, 12);
    auto t = subcat_from_indecomposables(
        a2, {projective_module(a2, 0), simple_module(a2, 0)}, 2);
    auto triple = triple_from_tilting(t, TripleKind::CotorsionTorsion, indecs, 2);
    // Gen(P_1 + S_1) = {P_1, S_1}; F = {S_2}.
    CHECK(sorted_total_dims(triple.t) == std::vector<int>{1, 2});
    CHECK(sorted_total_dims(triple.f) == std::vector<int>{1});
    CHECK(is_isomorphic(triple.f.generators[0], simple_module(a2, 1), 2));
    CHECK(verify_triple(triple, indecs, 2).pass);
}

TEST_CASE("tau-triples of all stt objects of A_3") {
    auto a3 = corpus::algebra("a3");
    auto indecs = enumerate_indecomposables(a3, 12);
    auto stts = enumerate_stt(a3, indecs, SttMode::Def61, 3);
    REQUIRE(stts.size() == 14);
    for (auto& t : stts) {
        auto triple = triple_from_tilting(t, TripleKind::TauCotorsionTorsion, indecs, 3);
        auto v = verify_triple(triple, indecs, 3);
        CHECK_MESSAGE(v.pass, "stt with ", t.generators.size(), " generators");
        // Round-trip: C intersect T = add T is re-checked inside
        // triple_from_tilting; here check T = Fac of provenance.
        for (auto& x : indecs) {
            bool in_t = false;
            for (auto& g : triple.t.generators)
                if (is_isomorphic(g, x, 3)) in_t = true;
            CHECK(in_t == fac_contains(t, x));
        }
    }
}

TEST_CASE("non-tilting input is rejected") {
    auto a2 = corpus::algebra("a2");
    auto indecs = enumerate_indecomposables(a2, 12);
    auto bad = subcat_from_indecomposables(
        a2, {simple_module(a2, 0), simple_module(a2, 1)}, 4);
    CHECK_THROWS_AS(triple_from_tilting(bad, TripleKind::CotorsionTorsion, indecs, 4),
                    const NotCertified&);
}

TEST_CASE("torsion pair axioms fail for a non-closed class") {
    auto a2 = corpus::algebra("a2");
    auto indecs = enumerate_indecomposables(a2, 12);
    // T = {S_1} is not a torsion class paired with F = {S_2}: Hom(S_1,S_2)=0
    // holds but P_1 has no canonical sequence with these classes.
    auto tc = subcat_from_indecomposables(a2, {simple_module(a2, 0)}, 5);
    auto fc = subcat_from_indecomposables(a2, {simple_module(a2, 1)}, 5);
    CHECK(!verify_torsion_pair(tc, fc, indecs, 5).pass);
}

TEST_CASE("transport of triples across a2-ext-p1") {
    RecollementView rv(corpus::extension("a2-ext-p1"));
    auto& ctx = rv.ctx();
    auto bind = enumerate_indecomposables(ctx.base, 12);
    auto aind = enumerate_indecomposables(ctx.extended, 12);

    // Restrict every cotorsion torsion triple of the extension.
    for (auto& t : enumerate_tilting(ctx.extended, aind, TiltingMode::DefBBOS, 6)) {
        auto triple = triple_from_tilting(t, TripleKind::CotorsionTorsion, aind, 6);
        auto moved = transport_triple(Direction::Restrict, rv, triple, aind, bind, 6);
        CHECK(verify_triple(moved.regenerated, bind, 6).pass);
        if (moved.comparison.applicable) CHECK(moved.comparison.verdict.pass);
        CHECK(restrict_proof_identities(rv, triple, bind, aind, 6).pass);
    }
    // Extend every tau-triple of the base.
    for (auto& t : enumerate_stt(ctx.base, bind, SttMode::Def61, 6)) {
        auto triple = triple_from_tilting(t, TripleKind::TauCotorsionTorsion, bind, 6);
        auto moved = transport_triple(Direction::Extend, rv, triple, bind, aind, 6);
        CHECK(verify_triple(moved.regenerated, aind, 6).pass);
        CHECK(moved.comparison.applicable);
        CHECK(moved.comparison.verdict.pass);
        CHECK(extend_proof_identity(rv, triple, aind, 6).pass);
    }
}

TEST_CASE("membership predicates agree with definitions") {
    auto a3 = corpus::algebra("a3");
    auto indecs = enumerate_indecomposables(a3, 12);
    auto t = subcat_from_indecomposables(a3, {projective_module(a3, 0)}, 7);
    for (auto& x : indecs) {
        CHECK(hom_perp_contains(t, x) == (hom_dim(t.sum_of_generators(), x) == 0));
        CHECK(ext1_perp_contains(t, x) == (ext_dim(1, x, t.sum_of_generators()) == 0));
        if (fac_contains(t, x)) CHECK(in_gen(t, x));
    }
}
