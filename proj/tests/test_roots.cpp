#include <doctest.h>

#include "quiverlab/gallery.hpp"
#include "quiverlab/roots.hpp"
#include "quiverlab/selftest.hpp"

using namespace quiverlab;

namespace {
const Quiver jordan = jordan_quiver();
const Quiver a1 = a1_quiver();
const IntVec one({1});
} // namespace

TEST_CASE("framed graphs") {
    RootGraph a2 = framed_graph(a1, one);
    CHECK(a2.size() == 2);
    CHECK(a2.edges[0][1] == 1);
    CHECK(a2.edges[0][0] == 0);
    CHECK(a2.cartan() == IntMatrix{{2, -1}, {-1, 2}});

    RootGraph jg = framed_graph(jordan, one);
    CHECK(jg.edges[0][0] == 1); // loop
    CHECK(jg.cartan()[0][0] == 0);

    RootGraph isolated = framed_graph(jordan, IntVec({0}));
    CHECK(isolated.edges[0][1] == 0);
}

TEST_CASE("positive root test on the A2 graph") {
    RootGraph a2 = framed_graph(a1, one);
    CHECK(is_positive_root(a2, IntVec({1, 1})).verdict == RootVerdict::RealRoot);
    CHECK(is_positive_root(a2, IntVec({1, 0})).verdict == RootVerdict::RealRoot);
    CHECK(is_positive_root(a2, IntVec({2, 1})).verdict == RootVerdict::NotPositiveRoot);
    CHECK(is_positive_root(a2, IntVec({1, 2})).verdict == RootVerdict::NotPositiveRoot);
    CHECK(is_positive_root(a2, IntVec({2, 2})).verdict == RootVerdict::NotPositiveRoot);
    CHECK_THROWS_AS(is_positive_root(a2, IntVec({0, 0})), input_error);
    CHECK_THROWS_AS(is_positive_root(a2, IntVec({-1, 1})), input_error);
}

TEST_CASE("positive root test on the framed Jordan graph") {
    RootGraph jg = framed_graph(jordan, one);
    for (Int d = 0; d <= 20; ++d) {
        RootCheckResult check = is_positive_root(jg, IntVec({d, 1}));
        CHECK(check.verdict != RootVerdict::NotPositiveRoot);
    }
    // A multiple of the framing simple root is not a root.
    CHECK(is_positive_root(jg, IntVec({0, 2})).verdict == RootVerdict::NotPositiveRoot);
    // Multiples of the loop-vertex simple root are imaginary roots.
    CHECK(is_positive_root(jg, IntVec({5, 0})).verdict == RootVerdict::ImaginaryRoot);
}

TEST_CASE("reflection traces descend in height and replay") {
    RootGraph a2 = framed_graph(a1, IntVec({3}));
    IntVec alpha({2, 1});
    RootCheckResult check = is_positive_root(a2, alpha);
    IntMatrix cartan_matrix = a2.cartan();
    IntVec current = alpha;
    Int height = current.sum();
    for (const auto& [v, after] : check.trace) {
        IntVec pairing = mat_apply(cartan_matrix, current);
        current[v] -= pairing[v];
        CHECK(current == after);
        CHECK(after.sum() < height);
        height = after.sum();
    }
}

TEST_CASE("quiver variety nonemptiness") {
    for (Int d = 0; d <= 15; ++d)
        for (Int f = 0; f <= 15; ++f)
            CHECK(nakajima_nonempty(a1, IntVec({d}), IntVec({f})).nonempty == (d <= f));
    for (Int d = 0; d <= 20; ++d) CHECK(nakajima_nonempty(jordan, IntVec({d}), one).nonempty);
    CHECK(nakajima_nonempty(jordan, IntVec({0}), IntVec({0})).nonempty);
}

TEST_CASE("parabolic nonemptiness closed forms") {
    CHECK(parabolic_nonempty(jordan, IntVec({3}), IntVec({2}), one).nonempty);
    CHECK_FALSE(parabolic_nonempty(jordan, IntVec({2}), IntVec({2}), one).nonempty);
    for (Int f = 0; f <= 8; ++f)
        for (Int d = 0; d <= 8; ++d)
            for (Int k = 0; k <= d; ++k)
                CHECK(parabolic_nonempty(a1, IntVec({d}), IntVec({k}), IntVec({f})).nonempty ==
                      (d <= f));
    CHECK(parabolic_nonempty(jordan, IntVec({0}), IntVec({0}), one).nonempty);
}

TEST_CASE("Brill-Noether nonemptiness") {
    CHECK_FALSE(bn_nonempty(jordan, IntVec({2}), one, IntVec({3})).nonempty);
    CHECK(bn_nonempty(jordan, IntVec({6}), one, IntVec({3})).nonempty);
    CHECK(bn_nonempty(jordan, IntVec({4}), one, IntVec({0})).nonempty ==
          nakajima_nonempty(jordan, IntVec({4}), one).nonempty);
}

TEST_CASE("reduction traces record the recursion") {
    NonemptyVerdict verdict = parabolic_nonempty(jordan, IntVec({3}), IntVec({2}), one);
    REQUIRE(verdict.trace.size() >= 2);
    for (std::size_t t = 0; t + 1 < verdict.trace.size(); ++t) {
        const auto& [d, k] = verdict.trace[t];
        const auto& [dn, kn] = verdict.trace[t + 1];
        CHECK(dn == vec_sub(d, k));
        CHECK(kn == vec_max(vec_add(k, k0_vector(jordan, dn, one)), Int(0)));
    }
}

TEST_CASE("stratum tables") {
    auto table = strata_table(jordan, IntVec({3}), one, IntVec({0}));
    REQUIRE(table.size() == 3);
    CHECK(table[0].r == IntVec({0}));
    CHECK(table[0].stratum_dim == 6);
    CHECK(table[1].stratum_dim == 4);
    CHECK(table[2].stratum_dim == 0);
    for (const StratumReport& row : table) {
        CHECK(row.nonempty);
        CHECK(row.pminus_preimage_dim == row.stratum_dim + row.pminus_fiber_dim);
    }

    auto a1_table = strata_table(a1, IntVec({2}), IntVec({3}), one);
    REQUIRE(a1_table.size() == 2);
    CHECK(a1_table[0].r == IntVec({1}));
    CHECK(a1_table[1].r == IntVec({2}));

    auto top = strata_table(jordan, IntVec({1}), one, IntVec({1}));
    REQUIRE(top.size() == 1);
    CHECK(top[0].r == IntVec({1}));

    CHECK_THROWS_AS(strata_table(jordan, IntVec({30}), one, IntVec({0}), 10), overflow_error);
}

TEST_CASE("closed-form suites") {
    SuiteResult result = suite_root_closed_forms();
    CHECK(result.failures == 0);
}
