#include "quiverlab/selftest.hpp"

#include <functional>
#include <sstream>

#include "quiverlab/dims.hpp"
#include "quiverlab/gallery.hpp"
#include "quiverlab/rep.hpp"
#include "quiverlab/rmatrix.hpp"
#include "quiverlab/roots.hpp"

namespace quiverlab {

namespace {

Int draw(std::mt19937_64& rng, Int lo, Int hi) {
    return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Recorder {
    SuiteResult result;

    explicit Recorder(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++result.cases;
        if (ok) return;
        ++result.failures;
        if (result.details.size() < 5) result.details.push_back(what);
    }
};

} // namespace

Quiver random_quiver(std::mt19937_64& rng, Int max_vertices) {
    Int n = draw(rng, 1, max_vertices);
    std::vector<std::string> vertices;
    for (Int t = 0; t < n; ++t) vertices.push_back("v" + std::to_string(t));
    std::vector<Arrow> arrows;
    Int next_id = 0;
    for (Int v = 0; v < n; ++v)
        for (Int w = 0; w < n; ++w) {
            Int roll = draw(rng, 0, 7);
            Int count = roll < 4 ? 0 : roll - 4; // multiplicity 0..3, biased sparse
            for (Int t = 0; t < count; ++t)
                arrows.push_back({"e" + std::to_string(next_id++), vertices[static_cast<std::size_t>(v)],
                                  vertices[static_cast<std::size_t>(w)]});
        }
    return Quiver(std::move(vertices), std::move(arrows));
}

IntVec random_vec(std::mt19937_64& rng, std::size_t n, Int lo, Int hi) {
    IntVec v(n);
    for (std::size_t t = 0; t < n; ++t) v[t] = draw(rng, lo, hi);
    return v;
}

SuiteResult suite_exact_linalg(std::uint64_t seed, int cases) {
    Recorder rec("exact_linalg");
    std::mt19937_64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        std::size_t rows = static_cast<std::size_t>(draw(rng, 0, 6));
        std::size_t cols = static_cast<std::size_t>(draw(rng, 0, 6));
        RMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rat(draw(rng, -9, 9), draw(rng, 1, 5));
        std::size_t rk = rank(m);
        rec.check(rk == rank(m.transpose()), "rank(M) != rank(M^T)");
        RMatrix k = kernel_basis(m);
        rec.check(cols == rk + k.cols(), "rank-nullity failed");
        rec.check(k.cols() == 0 || (m * k).is_zero(), "kernel basis not annihilated");

        Rational a = rat(draw(rng, -1000000, 1000000), draw(rng, 1, 99991));
        Rational b = rat(draw(rng, -1000000, 1000000), draw(rng, 1, 99991));
        rec.check((a + b) - b == a, "exact arithmetic failed");
    }
    return rec.result;
}

SuiteResult suite_quiver_calculus(std::uint64_t seed, int cases) {
    Recorder rec("quiver_calculus");
    std::mt19937_64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        Quiver q = random_quiver(rng);
        std::size_t n = q.num_vertices();
        IntMatrix c = cartan(q);
        bool symmetric = true;
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w) symmetric &= (c[v][w] == c[w][v]);
        rec.check(symmetric, "cartan matrix not symmetric");

        IntMatrix cd = cartan(double_quiver(q));
        bool doubled = true;
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w) {
                Int expected = v == w ? 2 - 4 * q.arrow_count(v, v) : 2 * c[v][w];
                doubled &= (cd[v][w] == expected);
            }
        rec.check(doubled, "cartan of the double quiver mismatched");

        IntVec d = random_vec(rng, n, 0, 6);
        IntVec f = random_vec(rng, n, 0, 6);
        rec.check(vec_add(k0_vector(q, d, f), f) == mat_apply(c, d), "k0 + f != C d");

        Int level = draw(rng, 0, 3);
        Quiver rep = repetition(q, level, RepetitionVariant::Plain);
        rec.check(rep.num_vertices() == n * static_cast<std::size_t>(level + 1),
                  "repetition vertex count");
        rec.check(rep.num_arrows() == q.num_arrows() * static_cast<std::size_t>(level + 1) +
                                          n * static_cast<std::size_t>(level),
                  "repetition arrow count");
    }
    return rec.result;
}

SuiteResult suite_dim_identities(std::uint64_t seed, int cases) {
    Recorder rec("dim_identities");
    std::mt19937_64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        Quiver q = random_quiver(rng);
        std::size_t n = q.num_vertices();
        IntVec d = random_vec(rng, n, 0, 6);
        IntVec f = random_vec(rng, n, 0, 6);
        IntVec k(n);
        for (std::size_t v = 0; v < n; ++v) k[v] = draw(rng, 0, d[v]);

        rec.check(dim_nakajima(q, d, f) == dim_nakajima_expanded(q, d, f),
                  "dimension rephrasing identity failed");

        IntVec lhs = k0_vector(q, vec_sub(d, k), f);
        IntVec rhs = vec_sub(k0_vector(q, d, f), mat_apply(cartan(q), k));
        rec.check(lhs == rhs, "k0 shift identity failed");

        Int pair = dim_parabolic_pair(q, d, k, f);
        Int half = dim_nakajima(q, d, f) + dim_nakajima(q, vec_sub(d, k), f);
        rec.check(2 * pair == half - 2 * half_dim_defect(q, k), "half-dimension identity failed");
        rec.check((2 * pair == half) == is_lagrangian_support(q, k),
                  "lagrangian criterion failed");

        // Triple identity with the excess correction.
        IntVec d2 = d;
        IntVec kp(n);
        for (std::size_t v = 0; v < n; ++v) kp[v] = draw(rng, 0, d2[v]);
        IntVec d1 = vec_add(d2, kp);
        IntVec d0 = vec_add(d1, k);
        ChainDims triple{{d0, d1, d2}, f};
        auto [r1, r2] = excess(q, d0, d1, d2);
        Int lhs3 = dim_parabolic_chain(q, triple);
        Int rhs3 = dim_parabolic_pair(q, d0, k, f) + dim_parabolic_pair(q, d1, kp, f) -
                   dim_nakajima(q, d1, f) + r1 - r2;
        rec.check(lhs3 == rhs3, "triple dimension identity failed");

        // Chain = pair + flag fiber, on a random monotone chain.
        std::size_t ell = static_cast<std::size_t>(draw(rng, 1, 4));
        ChainDims chain;
        chain.f = f;
        chain.levels.push_back(d);
        IntVec current = d;
        for (std::size_t m = 0; m < ell; ++m) {
            IntVec next(n);
            for (std::size_t v = 0; v < n; ++v) next[v] = draw(rng, 0, current[v]);
            chain.levels.push_back(next);
            current = next;
        }
        IntVec total = vec_sub(chain.levels.front(), chain.levels.back());
        rec.check(dim_parabolic_chain(q, chain) ==
                      dim_parabolic_pair(q, d, total, f) + flag_fiber_dim(chain),
                  "chain fibration identity failed");

        // Stratum additivity for a valid (k, r) pair.
        IntVec lo = vec_max(vec_max(k, k0_vector(q, d, f)), Int(0));
        if (vec_le(lo, d)) {
            IntVec r(n);
            for (std::size_t v = 0; v < n; ++v) r[v] = draw(rng, lo[v], d[v]);
            Int stratum = dim_bn_stratum(q, d, f, r);
            Int fiber = *fiber_dim_pminus(k, r);
            rec.check(preimage_dim_pminus(q, d, k, f, r) == stratum + fiber,
                      "preimage additivity failed");
        }
    }
    return rec.result;
}

SuiteResult suite_root_closed_forms() {
    Recorder rec("root_closed_forms");
    Quiver jordan = jordan_quiver();
    IntVec one({1});
    for (Int d = 0; d <= 20; ++d)
        for (Int k = 0; k <= 20; ++k) {
            bool expected = k <= d && 2 * d >= k * (k + 1);
            bool got = parabolic_nonempty(jordan, IntVec({d}), IntVec({k}), one).nonempty;
            std::ostringstream what;
            what << "jordan parabolic nonempty mismatch at d=" << d << " k=" << k;
            rec.check(got == expected, what.str());
        }
    Quiver a1 = a1_quiver();
    for (Int d = 0; d <= 15; ++d)
        for (Int f = 0; f <= 15; ++f) {
            bool got = nakajima_nonempty(a1, IntVec({d}), IntVec({f})).nonempty;
            std::ostringstream what;
            what << "a1 nonempty mismatch at d=" << d << " f=" << f;
            rec.check(got == (d <= f), what.str());
        }
    // Monotonicity in k and nonemptiness of both endpoints on the Jordan quiver.
    for (Int d = 0; d <= 10; ++d)
        for (Int r = 0; r <= d; ++r) {
            if (!bn_nonempty(jordan, IntVec({d}), one, IntVec({r})).nonempty) continue;
            for (Int k = 0; k <= r; ++k)
                rec.check(bn_nonempty(jordan, IntVec({d}), one, IntVec({k})).nonempty,
                          "BN monotonicity failed");
            rec.check(nakajima_nonempty(jordan, IntVec({d}), one).nonempty &&
                          nakajima_nonempty(jordan, IntVec({d - r}), one).nonempty,
                      "correspondence endpoints not both nonempty");
        }
    return rec.result;
}

SuiteResult suite_gallery_and_verification(std::uint64_t seed, int quotient_cases) {
    Recorder rec("gallery_verification");
    std::mt19937_64 rng(seed);

    const GalleryFamily families[] = {GalleryFamily::HilbMonomial, GalleryFamily::HilbDistinct,
                                      GalleryFamily::A1, GalleryFamily::An};
    for (GalleryFamily family : families)
        for (int t = 0; t < 25; ++t) {
            ParabolicPoint pt = random_gallery_point(family, rng());
            ValidationReport report = validate_parabolic_point(pt);
            rec.check(report.ok(), "gallery point failed validation: " + to_string(family) +
                                       (report.ok() ? "" : ": " + report.violations.front()));
            IntVec stratum = bn_stratum_of(pt.rep);
            IntVec bound = k0_vector(pt.rep.quiver, pt.rep.d, pt.rep.f);
            rec.check(vec_le(bound, stratum), "hom dimension below the k0 bound");
        }

    // Quotients of stable points along random subspaces of the hom space
    // stay flat and stable.
    int done = 0;
    while (done < quotient_cases) {
        GalleryFamily family = families[rng() % 4];
        ParabolicPoint pt = random_gallery_point(family, rng());
        const Quiver& q = pt.rep.quiver;
        std::vector<RMatrix> K;
        bool any = false;
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            RMatrix hom = hom_basis(pt.rep, v);
            Int pick = hom.cols() == 0 ? 0 : draw(rng, 0, static_cast<Int>(hom.cols()));
            if (pick == 0) {
                K.emplace_back(static_cast<std::size_t>(pt.rep.d[v]), 0);
                continue;
            }
            RMatrix combo(hom.rows(), static_cast<std::size_t>(pick));
            for (std::size_t c = 0; c < combo.cols(); ++c)
                for (std::size_t h = 0; h < hom.cols(); ++h) {
                    Rational weight = rat(draw(rng, -3, 3));
                    for (std::size_t r = 0; r < hom.rows(); ++r)
                        combo.at(r, c) += weight * hom.at(r, h);
                }
            RMatrix span = col_space_basis(combo);
            K.push_back(span);
            any = any || span.cols() > 0;
        }
        QuotientResult quotient = quotient_by_K(pt.rep, K);
        rec.check(quotient.flat, "quotient lost flatness");
        rec.check(quotient.stable, "quotient lost stability");
        (void)any;
        ++done;
    }

    // Monomial point strata against the combinatorial corner count.
    for (Int total = 0; total <= 8; ++total) {
        std::vector<Partition> all;
        Partition current;
        std::function<void(Int, Int)> enumerate = [&](Int remaining, Int cap) {
            if (remaining == 0) {
                all.push_back(current);
                return;
            }
            for (Int part = std::min(cap, remaining); part >= 1; --part) {
                current.parts.push_back(part);
                enumerate(remaining - part, part);
                current.parts.pop_back();
            }
        };
        enumerate(total, total == 0 ? 1 : total);
        for (const Partition& p : all) {
            FramedRep rep = hilb_fixed_point(p);
            rec.check(bn_stratum_of(rep)[0] == corner_count(p),
                      "monomial stratum disagrees with the corner count");
        }
    }

    // Chain/flag round trip on flagged gallery points.
    for (int t = 0; t < 10; ++t) {
        ParabolicPoint pt = random_gallery_point(GalleryFamily::HilbMonomial, rng());
        ParabolicChainPoint ch = chain_from_flag(pt);
        rec.check(validate_chain(ch).ok(), "chain from flag failed validation");
        ParabolicPoint back = flag_from_chain(ch);
        rec.check(back.k_vector() == pt.k_vector(), "round trip changed the flag sizes");
        rec.check(bn_stratum_of(back.rep) == bn_stratum_of(pt.rep),
                  "round trip changed the stratum");
    }
    return rec.result;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
    std::vector<SuiteResult> results;
    results.push_back(suite_exact_linalg(seed ^ 0x1, 200));
    results.push_back(suite_quiver_calculus(seed ^ 0x2, 200));
    results.push_back(suite_dim_identities(seed ^ 0x3, 300));
    results.push_back(suite_root_closed_forms());
    results.push_back(suite_gallery_and_verification(seed ^ 0x4, 50));
    return results;
}

} // namespace quiverlab
