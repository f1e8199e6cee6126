#include <doctest.h>

#include "quiverlab/dims.hpp"
#include "quiverlab/gallery.hpp"
#include "quiverlab/selftest.hpp"

using namespace quiverlab;

namespace {
const Quiver jordan = jordan_quiver();
const Quiver a1 = a1_quiver();
const IntVec one({1});
} // namespace

TEST_CASE("quiver variety dimension") {
    CHECK(dim_nakajima(jordan, IntVec({3}), one) == 6);
    CHECK(dim_nakajima(a1, IntVec({2}), IntVec({5})) == 12);
    CHECK(dim_nakajima(jordan, IntVec({0}), one) == 0);
    for (Int d = 0; d <= 6; ++d)
        for (Int f = 0; f <= 6; ++f)
            CHECK(dim_nakajima(a1, IntVec({d}), IntVec({f})) == 2 * d * (f - d));
}

TEST_CASE("parabolic pair dimension") {
    for (Int d = 1; d <= 8; ++d) {
        CHECK(dim_parabolic_pair(jordan, IntVec({d}), one, one) == 2 * d - 2);
        if (d >= 2) CHECK(dim_parabolic_pair(jordan, IntVec({d}), IntVec({2}), one) == 2 * d - 6);
    }
    CHECK(dim_parabolic_pair(jordan, IntVec({5}), IntVec({0}), one) ==
          dim_nakajima(jordan, IntVec({5}), one));
    CHECK_THROWS_AS(dim_parabolic_pair(jordan, IntVec({1}), IntVec({2}), one), input_error);
}

TEST_CASE("complete flag dimension") {
    CHECK(dim_parabolic_full(jordan, IntVec({3}), one, one) == 4);
    CHECK(dim_parabolic_full(jordan, IntVec({4}), IntVec({2}), one) == 3);
    CHECK(dim_parabolic_full(jordan, IntVec({4}), IntVec({0}), one) ==
          dim_nakajima(jordan, IntVec({4}), one));
}

TEST_CASE("chain dimension") {
    // One step reduces to the pair formula.
    ChainDims pair{{IntVec({5}), IntVec({3})}, one};
    CHECK(dim_parabolic_chain(jordan, pair) ==
          dim_parabolic_pair(jordan, IntVec({5}), IntVec({2}), one));

    // Unit steps reduce to the complete-flag formula.
    ChainDims unit{{IntVec({5}), IntVec({4}), IntVec({3})}, one};
    CHECK(dim_parabolic_chain(jordan, unit) ==
          dim_parabolic_full(jordan, IntVec({5}), IntVec({2}), one));

    for (Int d = 2; d <= 9; ++d) {
        ChainDims steps{{IntVec({d}), IntVec({d - 1}), IntVec({d - 2})}, one};
        CHECK(dim_parabolic_chain(jordan, steps) == 2 * d - 5);
        CHECK(flag_fiber_dim(steps) == 1);
    }
    ChainDims bad{{IntVec({2}), IntVec({3})}, one};
    CHECK_THROWS_AS(dim_parabolic_chain(jordan, bad), input_error);
}

TEST_CASE("Brill-Noether dimension with clamping") {
    for (Int d = 1; d <= 10; ++d)
        for (Int k = 0; k <= d; ++k)
            CHECK(dim_bn(jordan, IntVec({d}), one, IntVec({k})).dim == 2 * d - k * (k + 1));

    for (Int f = 1; f <= 5; ++f)
        for (Int d = 1; d <= 6; ++d)
            for (Int k = 0; k <= d; ++k)
                CHECK(dim_bn(jordan, IntVec({d}), IntVec({f}), IntVec({k})).dim ==
                      2 * d * f - k * (k + f));

    for (Int f = 0; f <= 8; ++f)
        for (Int d = 0; d <= f; ++d)
            for (Int k = std::max<Int>(0, 2 * d - f); k <= d; ++k)
                CHECK(dim_bn(a1, IntVec({d}), IntVec({f}), IntVec({k})).dim ==
                      (2 * d - k) * f - 2 * d * (d - k) - k * k);

    // Small k clamps to k0 when k0 > 0.
    BnDim clamped = dim_bn(a1, IntVec({4}), IntVec({5}), IntVec({0}));
    CHECK(clamped.k_effective == IntVec({3}));
    CHECK(clamped.dim == dim_parabolic_pair(a1, IntVec({4}), IntVec({3}), IntVec({5})));
}

TEST_CASE("stratum dimensions") {
    CHECK(dim_bn_stratum(jordan, IntVec({3}), one, IntVec({2})) == 0);
    CHECK(dim_bn_stratum(jordan, IntVec({3}), one, IntVec({0})) ==
          dim_nakajima(jordan, IntVec({3}), one));
    CHECK(dim_bn_stratum(a1, IntVec({2}), IntVec({5}), one) == 10);
    CHECK_THROWS_AS(dim_bn_stratum(a1, IntVec({4}), IntVec({5}), IntVec({0})), input_error);
}

TEST_CASE("fiber dimensions of the two projections") {
    CHECK(*fiber_dim_pminus(IntVec({2}), IntVec({2})) == 0);
    CHECK(*fiber_dim_pminus(one, IntVec({2})) == 1);
    CHECK_FALSE(fiber_dim_pminus(IntVec({3}), IntVec({2})).has_value());

    // Single vertex, no arrows: over the dense stratum r = 0 the lift fiber
    // is the space of codimension-k hyperplane choices.
    Int d = 2, f = 5, k = 1;
    CHECK(*fiber_dim_pplus(a1, IntVec({d}), IntVec({k}), IntVec({f}), IntVec({0})) ==
          k * (f - 2 * (d - k) - k));
    CHECK_FALSE(
        fiber_dim_pplus(jordan, IntVec({3}), IntVec({2}), one, IntVec({0})).has_value());
}

TEST_CASE("preimage dimensions") {
    CHECK(preimage_dim_pminus(jordan, IntVec({3}), one, one, one) ==
          dim_parabolic_pair(jordan, IntVec({3}), one, one));
    CHECK(preimage_dim_pminus(jordan, IntVec({3}), one, one, IntVec({2})) == 1);
    CHECK_THROWS_AS(preimage_dim_pminus(jordan, IntVec({3}), IntVec({2}), one, one), input_error);

    // Dense stratum of the second projection reaches the full dimension.
    Int d = 2, f = 5, k = 1;
    CHECK(preimage_dim_pplus(a1, IntVec({d}), IntVec({k}), IntVec({f}), IntVec({0})) ==
          dim_parabolic_pair(a1, IntVec({d}), IntVec({k}), IntVec({f})));
}

TEST_CASE("excess numbers") {
    auto [r1, r2] = excess(jordan, IntVec({3}), IntVec({2}), IntVec({1}));
    CHECK(r1 == 1);
    CHECK(r2 == 2);
    CHECK(excess(jordan, IntVec({3}), IntVec({3}), IntVec({3})) == std::pair<Int, Int>{0, 0});
    CHECK(excess(a1, IntVec({3}), IntVec({2}), IntVec({1})) == std::pair<Int, Int>{1, 0});
    CHECK_THROWS_AS(excess(jordan, IntVec({1}), IntVec({2}), IntVec({0})), input_error);
}

TEST_CASE("half-dimension defect and Lagrangian support") {
    CHECK(half_dim_defect(jordan, one) == 1);
    CHECK_FALSE(is_lagrangian_support(jordan, one));
    CHECK(half_dim_defect(a1, IntVec({3})) == 0);
    CHECK(is_lagrangian_support(a1, IntVec({3})));

    Quiver path({"v", "w"}, {{"e", "v", "w"}});
    CHECK(half_dim_defect(path, IntVec({1, 0})) == 0);
    CHECK(is_lagrangian_support(path, IntVec({1, 0})));
    CHECK_FALSE(is_lagrangian_support(path, IntVec({1, 1})));
}

TEST_CASE("flag fiber dimension") {
    ChainDims single{{IntVec({4}), IntVec({2})}, one};
    CHECK(flag_fiber_dim(single) == 0);
    ChainDims unit{{IntVec({4}), IntVec({3}), IntVec({2}), IntVec({1})}, one};
    CHECK(flag_fiber_dim(unit) == 3 * 2 / 2);
}

TEST_CASE("randomized dimension identities") {
    SuiteResult result = suite_dim_identities(13, 150);
    CHECK(result.failures == 0);
}
