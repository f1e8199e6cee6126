#include <doctest.h>

#include "quiverlab/gallery.hpp"
#include "quiverlab/json_io.hpp"
#include "quiverlab/rep.hpp"
#include "quiverlab/selftest.hpp"

using namespace quiverlab;

TEST_CASE("partitions and corners") {
    CHECK(partition_from_string("").size() == 0);
    CHECK(partition_from_string("2,1").size() == 3);
    CHECK_THROWS_AS(partition_from_string("1,2"), input_error);
    CHECK_THROWS_AS(partition_from_string("a"), input_error);

    CHECK(corner_count(partition_from_string("")) == 0);
    CHECK(corner_count(partition_from_string("1")) == 1);
    CHECK(corner_count(partition_from_string("2,1")) == 2);
    CHECK(corner_count(partition_from_string("3,1,1")) == 2);
    CHECK(corner_count(partition_from_string("3,2,1")) == 3);
    CHECK(corner_count(partition_from_string("4")) == 1);
}

TEST_CASE("monomial fixed points") {
    FramedRep empty = hilb_fixed_point(partition_from_string(""));
    CHECK(empty.d == IntVec({0}));
    CHECK(is_flat(empty));
    CHECK(is_stable(empty).stable);

    FramedRep box = hilb_fixed_point(partition_from_string("1"));
    CHECK(box.d == IntVec({1}));
    CHECK(box.A[0].is_zero());
    CHECK(box.B[0].is_zero());
    CHECK(bn_stratum_of(box) == IntVec({1}));

    FramedRep stair = hilb_fixed_point(partition_from_string("2,1"));
    CHECK(stair.d == IntVec({3}));
    CHECK(is_flat(stair));
    CHECK(is_stable(stair).stable);
    CHECK(bn_stratum_of(stair) == IntVec({2}));
}

TEST_CASE("distinct point configurations") {
    CHECK(hilb_distinct_points({}).d == IntVec({0}));
    CHECK_THROWS_AS(hilb_distinct_points({{rat(1), rat(2)}, {rat(1), rat(2)}}), input_error);

    FramedRep generic = hilb_distinct_points({{rat(1), rat(2)}, {rat(3), rat(4)}, {rat(5), rat(6)}});
    CHECK(is_flat(generic));
    CHECK(is_stable(generic).stable);
    CHECK(bn_stratum_of(generic) == IntVec({0}));

    FramedRep origin =
        hilb_distinct_points({{rat(0), rat(0)}, {rat(1), rat(1, 2)}, {rat(-2, 3), rat(4)}});
    CHECK(bn_stratum_of(origin) == IntVec({1}));
}

TEST_CASE("single vertex points with kernel flags") {
    ParabolicPoint pt = a1_point(2, 5, 1);
    CHECK(validate_parabolic_point(pt).ok());
    CHECK(hom_dim(pt.rep, 0) == 1);
    CHECK(bn_stratum_of(pt.rep) == IntVec({1}));

    ParabolicPoint full = a1_point(3, 5, 3);
    CHECK(full.rep.j[0].is_zero());

    ParabolicPoint tight = a1_point(2, 3, 1);
    CHECK(validate_parabolic_point(tight).ok());
    CHECK(bn_stratum_of(tight.rep) == IntVec({1}));

    CHECK_THROWS_AS(a1_point(3, 2, 1), input_error);
    CHECK_THROWS_AS(a1_point(2, 3, 0), input_error);
}

TEST_CASE("type A coordinate points") {
    FramedRep rep = an_flag_point(IntVec({3, 1}), 4);
    CHECK(validate_rep(rep).ok());
    CHECK(bn_stratum_of(rep) == IntVec({2, 1}));

    FramedRep single = an_flag_point(IntVec({2}), 5);
    ParabolicPoint a1pt = a1_point(2, 5, 2);
    CHECK(single.d == a1pt.rep.d);
    CHECK(single.i[0] == a1pt.rep.i[0]);
    CHECK(single.j[0] == a1pt.rep.j[0]);

    CHECK(an_flag_point(IntVec({0, 0}), 3).d == IntVec({0, 0}));
    CHECK_THROWS_AS(an_flag_point(IntVec({1, 2}), 3), input_error);
    CHECK_THROWS_AS(an_flag_point(IntVec({4, 2}), 3), input_error);
}

TEST_CASE("seeded gallery points are reproducible and valid") {
    for (const char* name : {"hilb_monomial", "hilb_distinct", "a1", "an"}) {
        GalleryFamily family = gallery_family_from_string(name);
        ParabolicPoint first = random_gallery_point(family, 42);
        ParabolicPoint second = random_gallery_point(family, 42);
        CHECK(point_to_json(first).dump() == point_to_json(second).dump());
        CHECK(validate_parabolic_point(first).ok());
    }
    CHECK_THROWS_AS(gallery_family_from_string("nope"), input_error);
}

TEST_CASE("gallery suite") {
    SuiteResult result = suite_gallery_and_verification(3, 20);
    for (const std::string& detail : result.details) MESSAGE(detail);
    CHECK(result.failures == 0);
}
