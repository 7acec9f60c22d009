#include <doctest.h>

#include "opext/corpus.hpp"
#include "opext/decompose.hpp"
#include "opext/enumerate.hpp"

using namespace opext;

TEST_CASE("decompose a known direct sum") {
    auto a3 = corpus::algebra("a3");
    auto p1 = projective_module(a3, 0);
    auto s2 = simple_module(a3, 1);
    auto sum = direct_sum({p1, s2, s2}).sum;
    auto grouped = decompose_grouped(sum, 11);
    REQUIRE(grouped.size() == 2);
    int total = 0;
    for (auto& [rep, mult] : grouped) {
        total += mult;
        CHECK((is_isomorphic(rep, p1, 11) || is_isomorphic(rep, s2, 11)));
        if (is_isomorphic(rep, s2, 11)) CHECK(mult == 2);
    }
    CHECK(total == 3);
}

TEST_CASE("decompose random modules and reassemble") {
    auto ab = corpus::algebra("abzero");
    std::mt19937_64 rng(9);
    for (int i = 0; i < 8; ++i) {
        auto m = random_module(ab, rng);
        if (m.is_zero()) continue;
        auto parts = decompose(m, 13);
        std::size_t dim = 0;
        for (auto& p : parts) dim += p.total_dim();
        CHECK(dim == m.total_dim());
        std::vector<Representation> ps(parts.begin(), parts.end());
        CHECK(is_isomorphic(direct_sum(ps).sum, m, 13));
    }
}

TEST_CASE("indecomposable counts on the corpus") {
    auto a2 = corpus::algebra("a2");
    CHECK(enumerate_indecomposables(a2, 12).size() == 3);
    auto a3 = corpus::algebra("a3");
    CHECK(enumerate_indecomposables(a3, 12).size() == 6);
    auto ab = corpus::algebra("abzero");
    CHECK(enumerate_indecomposables(ab, 12).size() == 5);
    CHECK(has_interval_classification(*a3));
    CHECK(has_interval_classification(*ab));
}

TEST_CASE("closed form agrees with brute force over F_2") {
    auto a2 = corpus::algebra("a2", Field::prime(2));
    auto closed = enumerate_indecomposables(a2, 4);
    auto brute = enumerate_indecomposables_bruteforce(a2, 4, 5'000'000);
    REQUIRE(closed.size() == brute.size());
    for (std::size_t i = 0; i < closed.size(); ++i)
        CHECK(is_isomorphic(closed[i], brute[i], 17));
}

TEST_CASE("every enumerated module is indecomposable") {
    auto ab = corpus::algebra("abzero");
    for (auto& m : enumerate_indecomposables(ab, 12)) {
        CHECK(decompose(m, 19).size() == 1);
        m.validate();
    }
}

TEST_CASE("cyclic submodule of a projective") {
    auto a3 = corpus::algebra("a3");
    auto p1 = projective_module(a3, 0);
    Matrix col(Field::rationals(), 1, 1);
    col.set(0, 0, mpq_class(1));
    auto sub = cyclic_submodule(p1, 0, col);  // generated by e_1: all of P_1
    CHECK(sub.rep.total_dim() == p1.total_dim());
    auto sub2 = cyclic_submodule(p1, 1, col);  // generated at vertex 2
    CHECK(sub2.rep.dims() == std::vector<int>{0, 1, 1});
    CHECK(sub2.map.is_injective());
}
