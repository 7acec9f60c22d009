#include <doctest.h>

#include "opext/corpus.hpp"
#include "opext/extension.hpp"

using namespace opext;

TEST_CASE("corpus algebra dimensions") {
    auto a2 = corpus::algebra("a2");
    CHECK(a2->dim() == 3);  // e1, e2, a
    CHECK(a2->num_vertices() == 2);

    auto a3 = corpus::algebra("a3");
    CHECK(a3->dim() == 6);  // e1, e2, e3, a, b, a.b

    auto ab = corpus::algebra("abzero");
    CHECK(ab->dim() == 5);  // a.b killed by the relation
    CHECK(ab->relations().size() == 1);
}

TEST_CASE("rewriting reduces the relation path to zero") {
    auto ab = corpus::algebra("abzero");
    Path path_ab{0, {0, 1}};  // a then b, 1 -> 3
    CHECK(ab->reduce(path_ab).empty());
    CHECK(ab->basis_index(path_ab) == -1);

    auto a3 = corpus::algebra("a3");
    auto red = a3->reduce(path_ab);
    REQUIRE(red.size() == 1);
    CHECK(red[0].coeff == mpq_class(1));
    CHECK(red[0].path == path_ab);
}

TEST_CASE("projective dims tables") {
    auto a3 = corpus::algebra("a3");
    auto dims = a3->projective_dims();
    // dims[v][w] = #basis paths v -> w
    CHECK(dims[0] == std::vector<int>{1, 1, 1});
    CHECK(dims[1] == std::vector<int>{0, 1, 1});
    CHECK(dims[2] == std::vector<int>{0, 0, 1});

    auto ab = corpus::algebra("abzero");
    CHECK(ab->projective_dims()[0] == std::vector<int>{1, 1, 0});
}

TEST_CASE("opposite algebra") {
    auto a3 = corpus::algebra("a3");
    auto op = a3->opposite();
    CHECK(op.dim() == a3->dim());
    // Arrows reverse: in the opposite, vertex 3 is the source of everything.
    CHECK(op.projective_dims()[2] == std::vector<int>{1, 1, 1});
}

TEST_CASE("path order is length-then-lex") {
    Path lazy{0, {}};
    Path a{0, {0}};
    Path ab{0, {0, 1}};
    CHECK(path_order(lazy, a) == std::strong_ordering::less);
    CHECK(path_order(a, ab) == std::strong_ordering::less);
    CHECK(path_order(ab, ab) == std::strong_ordering::equal);
}

TEST_CASE("relation validation rejects short paths") {
    auto a2 = corpus::algebra("a2");
    Relation r{{PathTerm{mpq_class(1), Path{0, {0}}}}};  // length 1
    CHECK_THROWS_AS(r.validate(a2->quiver()), const Error&);
}

TEST_CASE("one-point extension shape") {
    auto ctx = corpus::extension("a2-ext-p1");  // B = a2, P0 = P_1
    CHECK(ctx.base->num_vertices() == 2);
    CHECK(ctx.extended->num_vertices() == 3);
    CHECK(ctx.omega == 2);
    CHECK(ctx.new_arrows.size() == 1);
    CHECK(ctx.p0_dim() == 2);  // P_1 over a2 has dims (1,1)
    CHECK(ctx.p0_dims() == std::vector<int>{1, 1});
    // The extended algebra of a2-ext-p1 is linear A_3.
    CHECK(ctx.extended->dim() == 6);

    auto rt = context_from_extended(ctx.extended, ctx.omega);
    CHECK(rt.p0_multiplicities == ctx.p0_multiplicities);
    CHECK(rt.base->dim() == ctx.base->dim());
}

TEST_CASE("corpus inventory") {
    CHECK(corpus::names() == std::vector<std::string>{"a2", "a3", "abzero"});
    CHECK(corpus::extensions().size() == 3);
    CHECK(corpus::all_algebras().size() == 6);
    auto f2 = corpus::algebra("a2", Field::prime(2));
    CHECK(f2->field() == Field::prime(2));
    CHECK(f2->dim() == 3);
}
