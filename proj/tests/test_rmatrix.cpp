#include <doctest.h>

#include "quiverlab/rmatrix.hpp"
#include "quiverlab/selftest.hpp"

using namespace quiverlab;

namespace {

RMatrix from_ints(std::vector<std::vector<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    RMatrix m(r, c);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < c; ++b) m.at(a, b) = rat(rows[a][b]);
    return m;
}

bool same_span(const RMatrix& a, const RMatrix& b) {
    return col_space_basis(a) == col_space_basis(b);
}

} // namespace

TEST_CASE("rank on simple matrices") {
    CHECK(rank(RMatrix::identity(3)) == 3);
    CHECK(rank(RMatrix::zero(2, 5)) == 0);
    CHECK(rank(from_ints({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(RMatrix(0, 4)) == 0);
    CHECK(rank(RMatrix(4, 0)) == 0);
}

TEST_CASE("kernel bases are canonical and correct") {
    CHECK(kernel_basis(RMatrix::identity(4)).cols() == 0);
    CHECK(kernel_basis(RMatrix::zero(3, 3)) == RMatrix::identity(3));

    RMatrix m = from_ints({{1, 1}});
    RMatrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    CHECK(same_span(k, from_ints({{1}, {-1}})));
}

TEST_CASE("intersections of column spans") {
    RMatrix e1 = from_ints({{1}, {0}, {0}});
    RMatrix e2 = from_ints({{0}, {1}, {0}});
    RMatrix e3 = from_ints({{0}, {0}, {1}});
    RMatrix full = RMatrix::identity(3);

    RMatrix v = hstack(e1, e2);
    CHECK(same_span(intersect({v, full}), v));
    CHECK(intersect({e1.cols_block(0, 1), e2}).cols() == 0);
    CHECK(same_span(intersect({hstack(e1, e2), hstack(e2, e3)}), e2));
    CHECK_THROWS_AS(intersect({e1, RMatrix::identity(2)}), input_error);
}

TEST_CASE("products, stacking, solve") {
    RMatrix m = from_ints({{1, 2, 3}, {4, 5, 6}});
    CHECK(m * RMatrix::identity(3) == m);
    CHECK(vstack(m, from_ints({{7, 8, 9}})).rows() == 3);
    CHECK(hstack(m, m).cols() == 6);
    CHECK_THROWS_AS(m * m, input_error);

    auto x = solve(from_ints({{2}}), {rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rat(1, 2));

    CHECK_FALSE(solve(from_ints({{1}, {1}}), {rat(0), rat(1)}).has_value());
}

TEST_CASE("rational parsing and formatting") {
    CHECK(rational_to_string(rat(-6, 4)) == "-3/2");
    CHECK(rational_from_string("10/4") == rat(5, 2));
    CHECK(rational_from_string("-7") == rat(-7));
    CHECK_THROWS_AS(rational_from_string("x"), input_error);
    CHECK_THROWS_AS(rational_from_string("1/0"), input_error);
}

TEST_CASE("randomized linear algebra properties") {
    SuiteResult result = suite_exact_linalg(7, 80);
    CHECK(result.failures == 0);
}
