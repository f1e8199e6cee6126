#include <doctest.h>

#include "quiverlab/dims.hpp"
#include "quiverlab/gallery.hpp"
#include "quiverlab/rep.hpp"

using namespace quiverlab;

namespace {

const IntVec one({1});

FramedRep jordan_rep(std::vector<std::vector<long long>> x, std::vector<std::vector<long long>> y,
                     std::vector<long long> iv, std::vector<long long> jv) {
    std::size_t d = x.size();
    FramedRep rep;
    rep.quiver = jordan_quiver();
    rep.d = IntVec({static_cast<Int>(d)});
    rep.f = one;
    RMatrix xm(d, d), ym(d, d), im(d, 1), jm(1, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            xm.at(r, c) = rat(x[r][c]);
            ym.at(r, c) = rat(y[r][c]);
        }
    for (std::size_t r = 0; r < d; ++r) im.at(r, 0) = rat(iv[r]);
    for (std::size_t c = 0; c < d; ++c) jm.at(0, c) = rat(jv[c]);
    rep.A.push_back(xm);
    rep.B.push_back(ym);
    rep.i.push_back(im);
    rep.j.push_back(jm);
    return rep;
}

} // namespace

TEST_CASE("moment map residuals") {
    FramedRep staircase = hilb_fixed_point(partition_from_string("2,1"));
    CHECK(is_flat(staircase));

    FramedRep bad = jordan_rep({{0}}, {{0}}, {1}, {5});
    CHECK_FALSE(is_flat(bad));
    CHECK(moment_residual(bad)[0].at(0, 0) == rat(5));

    CHECK(is_flat(zero_rep(jordan_quiver(), one)));
}

TEST_CASE("stability saturation") {
    FramedRep points = hilb_distinct_points({{rat(1), rat(2)}, {rat(3), rat(4)}, {rat(0), rat(5)}});
    CHECK(is_stable(points).stable);

    FramedRep no_framing = jordan_rep({{0}}, {{0}}, {0}, {0});
    CHECK_FALSE(is_stable(no_framing).stable);

    CHECK(is_stable(zero_rep(jordan_quiver(), one)).stable);
}

TEST_CASE("hom dimensions at monomial points") {
    CHECK(hom_dim(hilb_fixed_point(partition_from_string("2,1")), 0) == 2);
    CHECK(hom_dim(hilb_fixed_point(partition_from_string("1")), 0) == 1);

    FramedRep an = an_flag_point(IntVec({3, 1}), 4);
    CHECK(bn_stratum_of(an) == IntVec({2, 1}));
}

TEST_CASE("strata of explicit representations") {
    CHECK(bn_stratum_of(hilb_distinct_points({{rat(1), rat(1)}, {rat(2), rat(3)}})) == IntVec({0}));
    CHECK(bn_stratum_of(hilb_distinct_points({{rat(0), rat(0)}, {rat(2), rat(3)}})) == IntVec({1}));

    // Hom dimensions never fall below the k0 bound at flat stable points.
    FramedRep rep = hilb_fixed_point(partition_from_string("3,1"));
    IntVec bound = k0_vector(rep.quiver, rep.d, rep.f);
    CHECK(vec_le(bound, bn_stratum_of(rep)));
}

TEST_CASE("parabolic point validation") {
    ParabolicPoint good = hilb_fixed_point_with_flag(partition_from_string("2,1"), 1);
    CHECK(validate_parabolic_point(good).ok());

    // A non-corner coordinate subspace is not annihilated.
    ParabolicPoint bad = good;
    RMatrix wrong(3, 1);
    wrong.at(0, 0) = 1; // the origin cell, hit by both shifts
    bad.flags[0] = {wrong};
    ValidationReport report = validate_parabolic_point(bad);
    CHECK_FALSE(report.ok());
    CHECK(report.violations.front().find("annihilated") != std::string::npos);

    ParabolicPoint empty_flags = good;
    empty_flags.flags[0].clear();
    CHECK(validate_parabolic_point(empty_flags).ok());
}

TEST_CASE("quotients by annihilated subspaces") {
    ParabolicPoint pt = hilb_fixed_point_with_flag(partition_from_string("2,1"), 1);
    QuotientResult quotient = quotient_by_K(pt.rep, {pt.flags[0][0]});
    CHECK(quotient.rep.d == IntVec({2}));
    CHECK(quotient.flat);
    CHECK(quotient.stable);
    CHECK(bn_stratum_of(quotient.rep) == IntVec({1}));

    QuotientResult untouched = quotient_by_K(pt.rep, {RMatrix(3, 0)});
    CHECK(untouched.rep.A[0] == pt.rep.A[0]);
    CHECK(untouched.rep.i[0] == pt.rep.i[0]);

    RMatrix not_annihilated(3, 1);
    not_annihilated.at(0, 0) = 1;
    CHECK_THROWS_AS(quotient_by_K(pt.rep, {not_annihilated}), input_error);
}

TEST_CASE("chains from flags and back") {
    ParabolicPoint pt = hilb_fixed_point_with_flag(partition_from_string("2,1"), 2);
    ParabolicChainPoint ch = chain_from_flag(pt);
    REQUIRE(ch.levels.size() == 3);
    CHECK(validate_chain(ch).ok());
    CHECK(ch.levels[0].d == IntVec({3}));
    CHECK(ch.levels[2].d == IntVec({1}));

    ParabolicPoint back = flag_from_chain(ch);
    CHECK(back.k_vector() == pt.k_vector());
    CHECK(bn_stratum_of(back.rep) == bn_stratum_of(pt.rep));
    for (std::size_t s = 0; s < pt.flags[0].size(); ++s)
        CHECK(col_space_basis(back.flags[0][s]) == col_space_basis(pt.flags[0][s]));

    ParabolicPoint trivial = hilb_fixed_point_with_flag(partition_from_string("2,1"), 0);
    CHECK(chain_from_flag(trivial).levels.size() == 1);
}

TEST_CASE("chain validation flags broken data") {
    ParabolicPoint pt = hilb_fixed_point_with_flag(partition_from_string("2,1"), 1);
    ParabolicChainPoint ch = chain_from_flag(pt);

    ParabolicChainPoint broken = ch;
    broken.pi[0][0] = RMatrix(2, 3); // zero map, not surjective
    ValidationReport report = validate_chain(broken);
    CHECK_FALSE(report.ok());

    ParabolicChainPoint single;
    single.levels.push_back(pt.rep);
    CHECK(validate_chain(single).ok());
}

TEST_CASE("projections out of a point") {
    ParabolicPoint trivial = hilb_fixed_point_with_flag(partition_from_string("2,1"), 0);
    CHECK(pminus(trivial).d == pplus(trivial).d);

    ParabolicPoint pt = hilb_fixed_point_with_flag(partition_from_string("2,1"), 1);
    FramedRep hat = pplus(pt);
    CHECK(hat.d == IntVec({2}));
    CHECK(is_stable(hat).stable);
    CHECK(vec_le(pt.k_vector(), bn_stratum_of(pminus(pt))));
}

TEST_CASE("forgetting chain levels and flag steps") {
    ParabolicPoint pt = hilb_fixed_point_with_flag(partition_from_string("2,1"), 2);
    ParabolicChainPoint ch = chain_from_flag(pt);

    ParabolicChainPoint inner = forget_last(forget_first(ch));
    ParabolicChainPoint inner2 = forget_first(forget_last(ch));
    REQUIRE(inner.levels.size() == inner2.levels.size());
    for (std::size_t m = 0; m < inner.levels.size(); ++m)
        CHECK(inner.levels[m].d == inner2.levels[m].d);

    ParabolicChainPoint one_step = chain_from_flag(hilb_fixed_point_with_flag(partition_from_string("2,1"), 1));
    ParabolicChainPoint trivial = forget_last(one_step);
    CHECK(trivial.levels.size() == 1);
    CHECK(trivial.levels[0].d == IntVec({3}));

    ParabolicPoint dropped = flag_P_minus_v(pt, 0);
    CHECK(dropped.k_vector() == IntVec({1}));

    ParabolicPoint quotiented = flag_P_plus_v(pt, 0);
    CHECK(quotiented.rep.d == IntVec({2}));
    CHECK(quotiented.k_vector() == IntVec({1}));
    CHECK(validate_parabolic_point(quotiented).ok());

    CHECK_THROWS_AS(flag_P_minus_v(hilb_fixed_point_with_flag(partition_from_string("2,1"), 0), 0),
                    input_error);
}

TEST_CASE("tangent complex certification") {
    ParabolicPoint pt = hilb_fixed_point_with_flag(partition_from_string("2,1"), 1);
    TangentReport report = tangent_complex(pt);
    CHECK(report.ambient_dim == 17);
    CHECK(report.rank_j == 7);
    CHECK(report.rank_dmu == 6);
    CHECK(report.complex_ok);
    CHECK(report.h_dim == 4);
    CHECK(report.formula_dim == 4);
    CHECK(report.certified());

    // Degenerate flags: the usual smooth quiver-variety tangent space.
    ParabolicPoint plain = hilb_fixed_point_with_flag(partition_from_string("2,1"), 0);
    TangentReport base = tangent_complex(plain);
    CHECK(base.certified());
    CHECK(base.h_dim == dim_nakajima(plain.rep.quiver, plain.rep.d, plain.rep.f));

    ParabolicPoint a1pt = a1_point(2, 5, 1);
    TangentReport a1rep = tangent_complex(a1pt);
    CHECK(a1rep.certified());
    CHECK(a1rep.h_dim == dim_parabolic_full(a1pt.rep.quiver, a1pt.rep.d, IntVec({1}), IntVec({5})));
}

TEST_CASE("fiber dimensions at a point") {
    // Two corners, one flag step: the forgetting map has a line of choices
    // above the image, the quotient map a line of lifts.
    ParabolicPoint pt = hilb_fixed_point_with_flag(partition_from_string("2,1"), 1);
    auto [down, up] = fiber_dims_at(pt, 0);
    CHECK(down == 1);
    CHECK(up == 1);

    // Generic stratum: the point is alone in its fiber.
    ParabolicPoint generic = a1_point(2, 5, 2);
    auto [gdown, gup] = fiber_dims_at(generic, 0);
    CHECK(gdown == 0);
    CHECK(gup == 3); // hyperplanes in the 4-dim lift space

    // With a single flag step the maps coincide with p-/p+, so the fibers
    // match the closed Grassmannian formulas at the point's stratum.
    ParabolicPoint single = a1_point(2, 5, 1);
    auto [sdown, sup] = fiber_dims_at(single, 0);
    IntVec r = bn_stratum_of(single.rep);
    IntVec rhat = bn_stratum_of(pplus(single));
    CHECK(sdown == *fiber_dim_pminus(single.k_vector(), r));
    CHECK(sup == *fiber_dim_pplus(single.rep.quiver, single.rep.d, single.k_vector(),
                                  single.rep.f, rhat));

    CHECK_THROWS_AS(fiber_dims_at(hilb_fixed_point_with_flag(partition_from_string("2,1"), 0), 0),
                    input_error);
}

TEST_CASE("block form of two-step chains") {
    ParabolicPoint pt = hilb_fixed_point_with_flag(partition_from_string("2,1"), 2);
    ParabolicChainPoint ch = chain_from_flag(pt);
    CHECK(block_form_check(ch));

    // Make the loop hit the composite kernel: the kernel columns stop
    // vanishing and the block form breaks.
    ParabolicChainPoint broken = ch;
    RMatrix kernel = kernel_basis(broken.pi[1][0] * broken.pi[0][0]);
    REQUIRE(kernel.cols() > 0);
    RMatrix bump(3, 3);
    for (std::size_t r = 0; r < 3; ++r) bump.at(r, 0) = kernel.at(r, 0);
    broken.levels[0].A[0] = broken.levels[0].A[0] + broken.levels[0].A[0] * bump + bump;
    CHECK_FALSE(block_form_check(broken));

    // A zero step keeps the form vacuously.
    ParabolicPoint small = hilb_fixed_point_with_flag(partition_from_string("2,1"), 1);
    ParabolicChainPoint two = chain_from_flag(small);
    ParabolicChainPoint padded;
    padded.levels = {two.levels[0], two.levels[0], two.levels[1]};
    padded.pi.push_back({RMatrix::identity(3)});
    padded.pi.push_back(two.pi[0]);
    CHECK(block_form_check(padded));
}
