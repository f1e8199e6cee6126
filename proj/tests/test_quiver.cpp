#include <doctest.h>

#include "quiverlab/gallery.hpp"
#include "quiverlab/quiver.hpp"
#include "quiverlab/selftest.hpp"

using namespace quiverlab;

namespace {
Quiver path_quiver() { return Quiver({"v", "w"}, {{"e", "v", "w"}}); }
} // namespace

TEST_CASE("arrow counts are direction sensitive") {
    CHECK(jordan_quiver().arrow_count("v", "v") == 1);
    CHECK(a1_quiver().arrow_count("v", "v") == 0);
    CHECK(path_quiver().arrow_count("v", "w") == 1);
    CHECK(path_quiver().arrow_count("w", "v") == 0);
    CHECK_THROWS_AS(path_quiver().arrow_count("v", "zzz"), input_error);
}

TEST_CASE("quiver construction rejects bad data") {
    CHECK_THROWS_AS(Quiver({"v", "v"}, {}), input_error);
    CHECK_THROWS_AS(Quiver({"v"}, {{"e", "v", "w"}}), input_error);
    CHECK_THROWS_AS(Quiver({"v"}, {{"e", "v", "v"}, {"e", "v", "v"}}), input_error);
}

TEST_CASE("cartan matrices") {
    CHECK(cartan(jordan_quiver()) == IntMatrix{{0}});
    CHECK(cartan(a1_quiver()) == IntMatrix{{2}});
    CHECK(cartan(path_quiver()) == IntMatrix{{2, -1}, {-1, 2}});
}

TEST_CASE("double quiver") {
    CHECK(double_quiver(a1_quiver()).num_arrows() == 0);
    Quiver dp = double_quiver(path_quiver());
    CHECK(dp.num_arrows() == 2);
    CHECK(dp.arrow_count("w", "v") == 1);
    CHECK(double_quiver(jordan_quiver()).arrow_count("v", "v") == 2);
}

TEST_CASE("framed quiver") {
    Quiver fa = framed_quiver(a1_quiver());
    CHECK(fa.num_vertices() == 2);
    CHECK(fa.num_arrows() == 1);
    CHECK(fa.is_framing_vertex(1));
    CHECK_FALSE(fa.is_framing_vertex(0));

    Quiver fj = framed_quiver(jordan_quiver());
    CHECK(fj.num_vertices() == 2);
    CHECK(fj.num_arrows() == 2);

    CHECK(framed_quiver(path_quiver()).num_vertices() == 4);
    CHECK(framed_quiver(path_quiver()).num_arrows() == 3);
}

TEST_CASE("repetition quivers") {
    Quiver hat = repetition(a1_quiver(), 1, RepetitionVariant::Framed);
    CHECK(hat.num_vertices() == 3);
    CHECK(hat.num_arrows() == 5);

    Quiver same = repetition(path_quiver(), 0, RepetitionVariant::Plain);
    CHECK(same.num_vertices() == path_quiver().num_vertices());
    CHECK(same.num_arrows() == path_quiver().num_arrows());

    Quiver bipartite({"a", "b", "c"}, {{"e1", "a", "b"}, {"e2", "c", "b"}});
    Quiver rep2 = repetition(bipartite, 2, RepetitionVariant::Plain);
    CHECK(rep2.num_vertices() == 9);
    CHECK(rep2.num_arrows() == 12);

    // The doubled variant doubles level arrows but not the p arrows.
    Quiver fd = repetition(a1_quiver(), 1, RepetitionVariant::FramedDouble);
    CHECK(fd.arrow_count("v@0", "v@1") == 1);
    CHECK(fd.arrow_count("v@1", "v@0") == 0);
    Quiver fdj = repetition(jordan_quiver(), 0, RepetitionVariant::FramedDouble);
    CHECK(fdj.arrow_count("v@0", "v@0") == 2);
}

TEST_CASE("k0 vector") {
    IntVec d({3}), f({1});
    CHECK(k0_vector(jordan_quiver(), d, f) == IntVec({-1}));
    CHECK(k0_vector(a1_quiver(), IntVec({2}), IntVec({5})) == IntVec({-1}));
    CHECK(k0_vector(a1_quiver(), IntVec({4}), IntVec({5})) == IntVec({3}));
    CHECK(k0_vector(path_quiver(), IntVec({0, 0}), IntVec({2, 7})) == IntVec({-2, -7}));
}

TEST_CASE("integer vector operations") {
    CHECK(vec_max(IntVec({-1}), IntVec({0})) == IntVec({0}));
    CHECK(vec_sub(IntVec({3}), IntVec({1}), true) == IntVec({2}));
    CHECK_THROWS_AS(vec_sub(IntVec({1}), IntVec({3}), true), input_error);
    CHECK_THROWS_AS(vec_add(IntVec({1}), IntVec({1, 2})), input_error);
    CHECK(vec_le(IntVec({1, 2}), IntVec({1, 3})));
    CHECK_FALSE(vec_le(IntVec({2, 2}), IntVec({1, 3})));

    for (Int d = 0; d <= 6; ++d)
        CHECK(bilinear(IntVec({d}), cartan(jordan_quiver()), IntVec({d})) == 0);
}

TEST_CASE("randomized quiver calculus properties") {
    SuiteResult result = suite_quiver_calculus(11, 80);
    CHECK(result.failures == 0);
}
