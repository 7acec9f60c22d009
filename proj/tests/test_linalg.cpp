#include <doctest.h>

#include "opext/matrix.hpp"

using namespace opext;

namespace {
Matrix make(Field f, std::size_t r, std::size_t c, std::vector<long> entries) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, mpq_class(entries[i * c + j]));
    return m;
}
}  // namespace

TEST_CASE("field ops canonicalize") {
    FieldOps q(Field::rationals());
    CHECK(q.canon(mpq_class(4, 6)) == mpq_class(2, 3));
    CHECK(q.inv(mpq_class(2, 3)) == mpq_class(3, 2));

    FieldOps f5(Field::prime(5));
    CHECK(f5.canon(mpq_class(7)) == mpq_class(2));
    CHECK(f5.canon(mpq_class(-1)) == mpq_class(4));
    CHECK(f5.inv(mpq_class(2)) == mpq_class(3));
    CHECK(f5.canon(mpq_class(1, 2)) == mpq_class(3));  // 1/2 = 3 mod 5

    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
}

TEST_CASE("rank and kernel over Q") {
    auto m = make(Field::rationals(), 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(rank(m) == 2);
    auto k = kernel_basis(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());

    auto id = Matrix::identity(Field::rationals(), 3);
    CHECK(rank(id) == 3);
    CHECK(kernel_basis(id).cols() == 0);
}

TEST_CASE("rank depends on the field") {
    // [[2]] is invertible over Q but zero over F_2.
    auto over_q = make(Field::rationals(), 1, 1, {2});
    CHECK(rank(over_q) == 1);
    Matrix over_f2(Field::prime(2), 1, 1);
    over_f2.set(0, 0, mpq_class(2));
    CHECK(over_f2.is_zero());
    CHECK(rank(over_f2) == 0);
}

TEST_CASE("solve_right and inverse") {
    auto m = make(Field::rationals(), 2, 2, {1, 2, 3, 5});
    auto b = make(Field::rationals(), 2, 1, {1, 1});
    auto x = solve_right(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);

    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Matrix::identity(Field::rationals(), 2));

    auto sing = make(Field::rationals(), 2, 2, {1, 2, 2, 4});
    CHECK(!inverse(sing).has_value());
    auto off = make(Field::rationals(), 2, 1, {1, 0});
    CHECK(!solve_right(sing, off).has_value());
}

TEST_CASE("span membership and basis completion") {
    auto span = make(Field::rationals(), 3, 2, {1, 0, 0, 1, 0, 0});
    CHECK(subspace_contains(span, make(Field::rationals(), 3, 1, {2, -3, 0})));
    CHECK(!subspace_contains(span, make(Field::rationals(), 3, 1, {0, 0, 1})));

    // complete_to_basis returns the added standard-basis columns.
    auto added = complete_to_basis(span);
    CHECK(added.cols() == 1);
    CHECK(rank(span.hstack(added)) == 3);

    auto cs = column_space_basis(make(Field::rationals(), 2, 3, {1, 2, 3, 2, 4, 6}));
    CHECK(cs.cols() == 1);
}

TEST_CASE("stack and product shapes") {
    auto a = make(Field::rationals(), 2, 2, {1, 0, 0, 1});
    auto b = make(Field::rationals(), 2, 1, {5, 7});
    auto h = a.hstack(b);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 3);
    CHECK(h.at(0, 2) == mpq_class(5));
    auto v = a.vstack(a);
    CHECK(v.rows() == 4);
    CHECK(a.transpose() == a);
    CHECK((a - a).is_zero());
    CHECK(a.pow(5) == a);
}
