#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quiverlab/dims.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// Undirected graph with edge multiplicities and loop counts; the root
/// system data for the Kac criterion.
struct RootGraph {
    std::vector<std::string> labels;
    std::vector<std::vector<Int>> edges; // symmetric; edges[v][v] = loop count

    std::size_t size() const { return labels.size(); }
    bool loop_free(std::size_t v) const { return edges[v][v] == 0; }

    /// C_vv = 2 - 2*loops, C_vw = -edges[v][w].
    IntMatrix cartan() const;
};

/// Underlying graph of Q together with an extra vertex "inf" joined to v by
/// f_v edges. The framing coordinate goes last.
RootGraph framed_graph(const Quiver& q, const IntVec& f);

enum class RootVerdict { NotPositiveRoot, RealRoot, ImaginaryRoot };

std::string to_string(RootVerdict v);

struct RootCheckResult {
    RootVerdict verdict;
    /// Reflections applied, in order: (vertex index, vector after the
    /// reflection). Heights strictly decrease along the trace.
    std::vector<std::pair<std::size_t, IntVec>> trace;
};

/// Kac criterion on graphs with loops: reflect at loop-free vertices with
/// positive pairing until the vector is a loop-free simple root (real),
/// lands in the fundamental region — connected support, (C alpha)_v <= 0 at
/// every loop-free support vertex — (imaginary), or degenerates (not a
/// positive root). Simple roots at loop vertices sit in the fundamental
/// region and count as imaginary.
RootCheckResult is_positive_root(const RootGraph& g, const IntVec& alpha);

struct NonemptyVerdict {
    bool nonempty = false;
    /// Reduction steps (d, k) of the recursion, from the input downwards.
    std::vector<std::pair<IntVec, IntVec>> trace;
    /// Root test at the end of the reduction, when one was reached.
    std::vector<RootCheckResult> root_checks;
    std::string reason;
};

/// M(d; f) is nonempty iff d = 0 or (d, 1) is a positive root of the framed
/// graph.
NonemptyVerdict nakajima_nonempty(const Quiver& q, const IntVec& d, const IntVec& f);

/// P(d, d-k; f) nonemptiness via the reduction d <- d-k,
/// k <- max(k + k0[d-k], 0) down to a plain quiver-variety root test.
NonemptyVerdict parabolic_nonempty(const Quiver& q, const IntVec& d, const IntVec& k,
                                   const IntVec& f);

/// BN^k(d; f) nonemptiness: empty unless k <= d, then equals the parabolic
/// verdict.
NonemptyVerdict bn_nonempty(const Quiver& q, const IntVec& d, const IntVec& f, const IntVec& k);

struct StratumReport {
    IntVec r;
    Int stratum_dim = 0;
    Int pminus_fiber_dim = 0;
    Int pminus_preimage_dim = 0;
    bool nonempty = false;
};

/// One report per stratum label max(k, k0[d], 0) <= r <= d in lexicographic
/// order; labels with negative stratum dimension are pruned. Throws
/// overflow_error when the label count exceeds the cap.
std::vector<StratumReport> strata_table(const Quiver& q, const IntVec& d, const IntVec& f,
                                        const IntVec& k, Int cap = 1000000);

} // namespace quiverlab
