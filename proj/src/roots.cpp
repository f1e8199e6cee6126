#include "quiverlab/roots.hpp"

#include <algorithm>

namespace quiverlab {

IntMatrix RootGraph::cartan() const {
    std::size_t n = size();
    IntMatrix c(n, std::vector<Int>(n, 0));
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) c[v][w] = (v == w ? 2 - 2 * edges[v][v] : -edges[v][w]);
    return c;
}

RootGraph framed_graph(const Quiver& q, const IntVec& f) {
    check_dim_vector(q, f, "f");
    std::size_t n = q.num_vertices();
    RootGraph g;
    g.labels = q.vertices();
    g.labels.push_back("inf");
    g.edges.assign(n + 1, std::vector<Int>(n + 1, 0));
    for (std::size_t v = 0; v < n; ++v) {
        g.edges[v][v] = q.arrow_count(v, v);
        for (std::size_t w = v + 1; w < n; ++w) {
            Int m = q.arrow_count(v, w) + q.arrow_count(w, v);
            g.edges[v][w] = m;
            g.edges[w][v] = m;
        }
        g.edges[v][n] = f[v];
        g.edges[n][v] = f[v];
    }
    return g;
}

std::string to_string(RootVerdict v) {
    switch (v) {
        case RootVerdict::NotPositiveRoot: return "NotPositiveRoot";
        case RootVerdict::RealRoot: return "RealRoot";
        case RootVerdict::ImaginaryRoot: return "ImaginaryRoot";
    }
    return "?";
}

namespace {

bool support_connected(const RootGraph& g, const IntVec& alpha) {
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < alpha.size(); ++v)
        if (alpha[v] != 0) support.push_back(v);
    if (support.empty()) return false;
    std::vector<bool> seen(alpha.size(), false);
    std::vector<std::size_t> stack = {support[0]};
    seen[support[0]] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : support)
            if (!seen[w] && g.edges[v][w] != 0) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return std::all_of(support.begin(), support.end(), [&](std::size_t v) { return seen[v]; });
}

// Index of v when alpha is the simple root delta_v, else nullopt-like -1.
long simple_root_index(const IntVec& alpha) {
    long index = -1;
    for (std::size_t v = 0; v < alpha.size(); ++v) {
        if (alpha[v] == 0) continue;
        if (alpha[v] != 1 || index != -1) return -1;
        index = static_cast<long>(v);
    }
    return index;
}

} // namespace

RootCheckResult is_positive_root(const RootGraph& g, const IntVec& alpha_in) {
    if (alpha_in.size() != g.size()) throw input_error("root test: vector/graph size mismatch");
    if (alpha_in.is_zero()) throw input_error("root test: zero vector");
    if (!alpha_in.all_nonneg()) throw input_error("root test: vector must be non-negative");

    RootCheckResult result;
    IntMatrix c = g.cartan();
    IntVec alpha = alpha_in;

    while (true) {
        if (!support_connected(g, alpha)) {
            result.verdict = RootVerdict::NotPositiveRoot;
            return result;
        }
        long simple = simple_root_index(alpha);
        if (simple >= 0 && g.loop_free(static_cast<std::size_t>(simple))) {
            result.verdict = RootVerdict::RealRoot;
            return result;
        }
        // Only loop-free support vertices can pair positively against alpha.
        IntVec pairing = mat_apply(c, alpha);
        std::size_t reflect = alpha.size();
        for (std::size_t v = 0; v < alpha.size(); ++v)
            if (alpha[v] != 0 && g.loop_free(v) && pairing[v] > 0) {
                reflect = v;
                break;
            }
        if (reflect == alpha.size()) {
            result.verdict = RootVerdict::ImaginaryRoot; // fundamental region
            return result;
        }
        alpha[reflect] -= pairing[reflect];
        result.trace.emplace_back(reflect, alpha);
        if (alpha[reflect] < 0) {
            result.verdict = RootVerdict::NotPositiveRoot;
            return result;
        }
    }
}

NonemptyVerdict nakajima_nonempty(const Quiver& q, const IntVec& d, const IntVec& f) {
    check_dim_vector(q, d, "d");
    check_dim_vector(q, f, "f");
    NonemptyVerdict verdict;
    verdict.trace.emplace_back(d, IntVec(d.size()));
    if (d.is_zero()) {
        verdict.nonempty = true;
        verdict.reason = "d = 0";
        return verdict;
    }
    if (!d.all_nonneg()) {
        verdict.nonempty = false;
        verdict.reason = "d has a negative entry";
        return verdict;
    }
    IntVec alpha = d;
    alpha.entries.push_back(1);
    RootCheckResult root = is_positive_root(framed_graph(q, f), alpha);
    verdict.nonempty = root.verdict != RootVerdict::NotPositiveRoot;
    verdict.reason = "(d, 1) root test: " + to_string(root.verdict);
    verdict.root_checks.push_back(std::move(root));
    return verdict;
}

NonemptyVerdict parabolic_nonempty(const Quiver& q, const IntVec& d_in, const IntVec& k_in,
                                   const IntVec& f) {
    check_dim_vector(q, d_in, "d");
    check_dim_vector(q, k_in, "k");
    check_dim_vector(q, f, "f");
    NonemptyVerdict verdict;
    IntVec d = d_in, k = k_in;
    while (true) {
        verdict.trace.emplace_back(d, k);
        if (!vec_le(k, d)) {
            verdict.nonempty = false;
            verdict.reason = "k exceeds d at some vertex";
            return verdict;
        }
        if (k.is_zero()) {
            NonemptyVerdict base = nakajima_nonempty(q, d, f);
            verdict.nonempty = base.nonempty;
            verdict.reason = base.reason;
            verdict.root_checks = std::move(base.root_checks);
            return verdict;
        }
        IntVec d_next = vec_sub(d, k);
        IntVec k_next = vec_max(vec_add(k, k0_vector(q, d_next, f)), Int(0));
        d = d_next;
        k = k_next;
    }
}

NonemptyVerdict bn_nonempty(const Quiver& q, const IntVec& d, const IntVec& f, const IntVec& k) {
    check_dim_vector(q, k, "k");
    if (!vec_le(k, d)) {
        NonemptyVerdict verdict;
        verdict.trace.emplace_back(d, k);
        verdict.nonempty = false;
        verdict.reason = "k exceeds d at some vertex";
        return verdict;
    }
    return parabolic_nonempty(q, d, k, f);
}

std::vector<StratumReport> strata_table(const Quiver& q, const IntVec& d, const IntVec& f,
                                        const IntVec& k, Int cap) {
    check_dim_vector(q, d, "d");
    check_dim_vector(q, f, "f");
    check_dim_vector(q, k, "k");
    if (!vec_le(k, d)) throw input_error("strata table requires k <= d");

    IntVec lo = vec_max(vec_max(k, k0_vector(q, d, f)), Int(0));
    const IntVec& hi = d;
    Int count = 1;
    for (std::size_t v = 0; v < d.size(); ++v) {
        if (lo[v] > hi[v]) return {};
        Int width = hi[v] - lo[v] + 1;
        if (width > cap || count > cap / width)
            throw overflow_error("stratum enumeration exceeds the cap");
        count *= width;
    }

    std::vector<StratumReport> table;
    IntVec r = lo;
    while (true) {
        Int stratum_dim = dim_bn_stratum(q, d, f, r);
        if (stratum_dim >= 0) {
            StratumReport report;
            report.r = r;
            report.stratum_dim = stratum_dim;
            report.pminus_fiber_dim = *fiber_dim_pminus(k, r);
            report.pminus_preimage_dim = preimage_dim_pminus(q, d, k, f, r);
            report.nonempty = parabolic_nonempty(q, d, r, f).nonempty;
            table.push_back(std::move(report));
        }
        // lexicographic successor in the box [lo, hi]
        std::size_t pos = r.size();
        while (pos > 0) {
            --pos;
            if (r[pos] < hi[pos]) {
                ++r[pos];
                for (std::size_t t = pos + 1; t < r.size(); ++t) r[t] = lo[t];
                break;
            }
            if (pos == 0) return table;
        }
        if (r.size() == 0) return table;
    }
}

} // namespace quiverlab
