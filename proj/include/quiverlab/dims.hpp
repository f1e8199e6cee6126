#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// Monotone sequence d(0) >= d(1) >= ... >= d(l) of dimension vectors plus
/// the shared framing vector.
struct ChainDims {
    std::vector<IntVec> levels;
    IntVec f;

    std::size_t length() const { return levels.empty() ? 0 : levels.size() - 1; }
};

void check_chain(const Quiver& q, const ChainDims& chain);

/// dim M(d; f) = 2 f^T d - d^T C d. May be negative; negativity implies
/// emptiness but the value is reported as-is.
Int dim_nakajima(const Quiver& q, const IntVec& d, const IntVec& f);

/// The expanded form 2 sum_e d_out d_in + 2 sum_v (d_v f_v - d_v^2); kept as
/// an independent route for identity checks against dim_nakajima.
Int dim_nakajima_expanded(const Quiver& q, const IntVec& d, const IntVec& f);

/// dim P(d, d-k; f) = dim M(d; f) - sum_v k_v (k_v - k0_v[d]).
Int dim_parabolic_pair(const Quiver& q, const IntVec& d, const IntVec& k, const IntVec& f);

/// dim F^k(d; f) = dim M(d; f) - f^T k + d^T C k - sum_v k_v (k_v + 1) / 2.
Int dim_parabolic_full(const Quiver& q, const IntVec& d, const IntVec& k, const IntVec& f);

/// dim P(d(0), ..., d(l); f).
Int dim_parabolic_chain(const Quiver& q, const ChainDims& chain);

struct BnDim {
    Int dim;
    IntVec k_raw;
    IntVec k_effective; // max(k, k0[d]) — same locus by the Hom lower bound
};

/// dim BN^k(d; f) after clamping k to max(k, k0[d]).
BnDim dim_bn(const Quiver& q, const IntVec& d, const IntVec& f, const IntVec& k);

/// dim BN^{=r}(d; f) = dim M(d; f) - sum_v r_v (r_v - k0_v[d]);
/// requires r >= max(k0[d], 0).
Int dim_bn_stratum(const Quiver& q, const IntVec& d, const IntVec& f, const IntVec& r);

/// Fiber of p- over the stratum BN^{=r}: product of Gr(k_v, r_v);
/// nullopt when r >= k fails (empty fiber).
std::optional<Int> fiber_dim_pminus(const IntVec& k, const IntVec& r);

/// Fiber of p+ over BN^{=r}(d-k; f): product of Gr(k_v, r_v - k0_v[d-k]);
/// nullopt when the lift does not exist.
std::optional<Int> fiber_dim_pplus(const Quiver& q, const IntVec& d, const IntVec& k,
                                   const IntVec& f, const IntVec& r);

/// dim p-^{-1}(BN^{=r}) = dim P(d, d-k) - sum_v (r_v - k_v)(r_v - k0_v[d]).
Int preimage_dim_pminus(const Quiver& q, const IntVec& d, const IntVec& k, const IntVec& f,
                        const IntVec& r);

/// dim p+^{-1}(BN^{=r}(d-k)) = dim P(d, d-k) - sum_v r_v (r_v - k_v - k0_v[d-k]).
Int preimage_dim_pplus(const Quiver& q, const IntVec& d, const IntVec& k, const IntVec& f,
                       const IntVec& r);

/// Correction integers of the composition square: R1 = sum_v k_v k'_v and
/// R2 = sum_{v,w} (|Q1(v,w)|+|Q1(w,v)|) k'_v k_w with k = d0-d1, k' = d1-d2.
std::pair<Int, Int> excess(const Quiver& q, const IntVec& d0, const IntVec& d1, const IntVec& d2);

/// dim P(d, d-k) = half the ambient symplectic dimension minus this defect.
Int half_dim_defect(const Quiver& q, const IntVec& k);

/// Lagrangian iff the support of k is totally disconnected in Q (no arrows
/// between support vertices, loops included).
bool is_lagrangian_support(const Quiver& q, const IntVec& k);

/// Dimension of the product of partial flag varieties fibering the chain
/// variety over the pair variety: sum_v sum_{m1<m2} kappa(m1)_v kappa(m2)_v.
Int flag_fiber_dim(const ChainDims& chain);

} // namespace quiverlab
