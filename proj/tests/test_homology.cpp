#include <doctest.h>

#include "opext/corpus.hpp"
#include "opext/homology.hpp"

using namespace opext;

TEST_CASE("projectives, injectives, simples over linear A_3") {
    auto a3 = corpus::algebra("a3");
    auto p1 = projective_module(a3, 0);
    CHECK(p1.dims() == std::vector<int>{1, 1, 1});
    CHECK(is_projective(p1));
    auto i1 = injective_module(a3, 0);
    CHECK(i1.dims() == std::vector<int>{1, 0, 0});
    CHECK(is_injective_module(i1));
    CHECK(is_isomorphic(i1, simple_module(a3, 0), 1));
    // P_3 = S_3 = I-socle end of the path.
    CHECK(projective_module(a3, 2).dims() == std::vector<int>{0, 0, 1});
}

TEST_CASE("hom with a projective computes the fiber dimension") {
    auto a3 = corpus::algebra("a3");
    auto p1 = projective_module(a3, 0);
    for (int v = 0; v < 3; ++v) {
        auto pv = projective_module(a3, v);
        CHECK(hom_dim(pv, p1) == static_cast<std::size_t>(p1.dim(v)));
    }
    CHECK(hom_dim(p1, simple_module(a3, 0)) == 1);  // onto the top
    CHECK(hom_dim(p1, simple_module(a3, 2)) == 0);  // S_3 is not a quotient of P_1
    CHECK(hom_dim(simple_module(a3, 0), p1) == 0);
}

TEST_CASE("ext of adjacent simples sees the arrow") {
    auto a3 = corpus::algebra("a3");
    auto s1 = simple_module(a3, 0);
    auto s2 = simple_module(a3, 1);
    auto s3 = simple_module(a3, 2);
    CHECK(ext_dim(1, s1, s2) == 1);
    CHECK(ext_dim(1, s2, s3) == 1);
    CHECK(ext_dim(1, s1, s3) == 0);  // hereditary, no direct arrow
    CHECK(ext_dim(1, s2, s1) == 0);  // wrong direction
    CHECK(ext_dim(2, s1, s3) == 0);  // hereditary: pd <= 1

    // abzero is not hereditary: the relation creates Ext^2.
    auto ab = corpus::algebra("abzero");
    CHECK(ext_dim(2, simple_module(ab, 0), simple_module(ab, 2)) == 1);
}

TEST_CASE("projective dimension") {
    auto a3 = corpus::algebra("a3");
    CHECK(projective_dimension(projective_module(a3, 0)) == 0);
    CHECK(projective_dimension(simple_module(a3, 0)) == 1);
    auto ab = corpus::algebra("abzero");
    CHECK(projective_dimension(simple_module(ab, 0)) == 2);
}

TEST_CASE("minimal presentation is exact") {
    auto ab = corpus::algebra("abzero");
    auto s1 = simple_module(ab, 0);
    auto pres = minimal_projective_presentation(s1);
    CHECK(pres.cover.is_surjective());
    CHECK(pres.p0.vertices == std::vector<int>{0});
    CHECK(is_isomorphic(pres.omega, kernel(pres.cover).rep, 3));
    // im(d) = Omega
    auto im = image(pres.d);
    CHECK(is_isomorphic(im.rep, pres.omega, 3));
    // Round-trip the algebra-matrix form of d.
    auto rebuilt = map_between_projective_sums(pres.p1, pres.p0, pres.algebra_matrix);
    CHECK(flatten_map(rebuilt) == flatten_map(pres.d));
}

TEST_CASE("tau on linear A_2") {
    auto a2 = corpus::algebra("a2");
    auto s1 = simple_module(a2, 0);
    CHECK(is_isomorphic(tau(s1), simple_module(a2, 1), 5));
    CHECK(tau(projective_module(a2, 0)).is_zero());
}

TEST_CASE("duality swaps projectives and injectives") {
    auto a3 = corpus::algebra("a3");
    auto p1 = projective_module(a3, 0);
    auto d = dual(p1);
    CHECK(d.algebra() == opposite_of(a3));
    CHECK(is_injective_module(d));
    CHECK(is_isomorphic(dual(d), p1, 7));  // double dual over the same pointer
    CHECK(opposite_of(opposite_of(a3)) == a3);
}

TEST_CASE("radical, top, socle of P_1 over A_3") {
    auto a3 = corpus::algebra("a3");
    auto p1 = projective_module(a3, 0);
    CHECK(radical(p1).rep.dims() == std::vector<int>{0, 1, 1});
    CHECK(top(p1).rep.dims() == std::vector<int>{1, 0, 0});
    CHECK(socle(p1).rep.dims() == std::vector<int>{0, 0, 1});
}

TEST_CASE("ext1 classes realize as short exact sequences") {
    auto a3 = corpus::algebra("a3");
    auto s1 = simple_module(a3, 0);
    auto s2 = simple_module(a3, 1);
    auto sp = ext_space(1, s1, s2);
    REQUIRE(sp.dim == 1);
    // Hom in degree 0 via ext_space agrees with hom_dim.
    CHECK(ext_space(0, s1, s2).dim == hom_dim(s1, s2));
}

TEST_CASE("random modules validate and behave additively") {
    auto ab = corpus::algebra("abzero");
    std::mt19937_64 rng(42);
    for (int i = 0; i < 10; ++i) {
        auto m = random_module(ab, rng);
        m.validate();  // relations respected
        auto n = random_module(ab, rng);
        auto s = direct_sum({m, n});
        CHECK(hom_dim(s.sum, m) == hom_dim(m, m) + hom_dim(n, m));
        CHECK(ext_dim(1, m, s.sum) == ext_dim(1, m, m) + ext_dim(1, m, n));
    }
}
