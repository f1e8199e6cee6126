#include "quiverlab/dims.hpp"

namespace quiverlab {

void check_chain(const Quiver& q, const ChainDims& chain) {
    if (chain.levels.empty()) throw input_error("chain must have at least one level");
    check_dim_vector(q, chain.f, "f");
    for (const IntVec& d : chain.levels) check_dim_vector(q, d, "chain level");
    for (std::size_t m = 0; m + 1 < chain.levels.size(); ++m)
        if (!vec_le(chain.levels[m + 1], chain.levels[m]))
            throw input_error("chain dimension vectors must be componentwise non-increasing");
}

Int dim_nakajima(const Quiver& q, const IntVec& d, const IntVec& f) {
    check_dim_vector(q, d, "d");
    check_dim_vector(q, f, "f");
    return 2 * dot(f, d) - bilinear(d, cartan(q), d);
}

Int dim_nakajima_expanded(const Quiver& q, const IntVec& d, const IntVec& f) {
    check_dim_vector(q, d, "d");
    check_dim_vector(q, f, "f");
    Int total = 0;
    for (const Arrow& a : q.arrows())
        total += 2 * d[q.vertex_index(a.out)] * d[q.vertex_index(a.in)];
    for (std::size_t v = 0; v < q.num_vertices(); ++v) total += 2 * (d[v] * f[v] - d[v] * d[v]);
    return total;
}

static void require_k_le_d(const IntVec& k, const IntVec& d) {
    if (!vec_le(k, d)) throw input_error("k must be componentwise at most d");
}

Int dim_parabolic_pair(const Quiver& q, const IntVec& d, const IntVec& k, const IntVec& f) {
    check_dim_vector(q, k, "k");
    require_k_le_d(k, d);
    IntVec k0 = k0_vector(q, d, f);
    Int dim = dim_nakajima(q, d, f);
    for (std::size_t v = 0; v < k.size(); ++v) dim -= k[v] * (k[v] - k0[v]);
    return dim;
}

Int dim_parabolic_full(const Quiver& q, const IntVec& d, const IntVec& k, const IntVec& f) {
    check_dim_vector(q, k, "k");
    require_k_le_d(k, d);
    Int dim = dim_nakajima(q, d, f) - dot(f, k) + bilinear(d, cartan(q), k);
    for (std::size_t v = 0; v < k.size(); ++v) dim -= k[v] * (k[v] + 1) / 2;
    return dim;
}

Int dim_parabolic_chain(const Quiver& q, const ChainDims& chain) {
    check_chain(q, chain);
    const IntVec& d0 = chain.levels.front();
    IntVec k = vec_sub(d0, chain.levels.back());
    Int dim = dim_nakajima(q, d0, chain.f) - dot(chain.f, k) + bilinear(d0, cartan(q), k);
    std::size_t ell = chain.length();
    for (std::size_t v = 0; v < d0.size(); ++v)
        for (std::size_t m1 = 1; m1 <= ell; ++m1) {
            Int kappa1 = chain.levels[m1 - 1][v] - chain.levels[m1][v];
            for (std::size_t m2 = m1; m2 <= ell; ++m2)
                dim -= kappa1 * (chain.levels[m2 - 1][v] - chain.levels[m2][v]);
        }
    return dim;
}

BnDim dim_bn(const Quiver& q, const IntVec& d, const IntVec& f, const IntVec& k) {
    check_dim_vector(q, k, "k");
    require_k_le_d(k, d);
    IntVec k0 = k0_vector(q, d, f);
    IntVec k_eff = vec_max(k, k0);
    Int dim = dim_nakajima(q, d, f);
    for (std::size_t v = 0; v < k.size(); ++v) dim -= k_eff[v] * (k_eff[v] - k0[v]);
    return {dim, k, k_eff};
}

Int dim_bn_stratum(const Quiver& q, const IntVec& d, const IntVec& f, const IntVec& r) {
    check_dim_vector(q, r, "r");
    IntVec k0 = k0_vector(q, d, f);
    if (!vec_le(vec_max(k0, Int(0)), r))
        throw input_error("stratum label must satisfy r >= max(k0[d], 0)");
    Int dim = dim_nakajima(q, d, f);
    for (std::size_t v = 0; v < r.size(); ++v) dim -= r[v] * (r[v] - k0[v]);
    return dim;
}

std::optional<Int> fiber_dim_pminus(const IntVec& k, const IntVec& r) {
    if (k.size() != r.size()) throw input_error("k and r index sets differ");
    if (!vec_le(k, r)) return std::nullopt;
    Int dim = 0;
    for (std::size_t v = 0; v < k.size(); ++v) dim += k[v] * (r[v] - k[v]);
    return dim;
}

std::optional<Int> fiber_dim_pplus(const Quiver& q, const IntVec& d, const IntVec& k,
                                   const IntVec& f, const IntVec& r) {
    check_dim_vector(q, r, "r");
    require_k_le_d(k, d);
    IntVec k0_hat = k0_vector(q, vec_sub(d, k), f);
    Int dim = 0;
    for (std::size_t v = 0; v < k.size(); ++v) {
        if (r[v] < k[v] + k0_hat[v]) return std::nullopt;
        dim += k[v] * (r[v] - k0_hat[v] - k[v]);
    }
    return dim;
}

Int preimage_dim_pminus(const Quiver& q, const IntVec& d, const IntVec& k, const IntVec& f,
                        const IntVec& r) {
    check_dim_vector(q, r, "r");
    if (!vec_le(k, r)) throw input_error("preimage stratum requires r >= k");
    IntVec k0 = k0_vector(q, d, f);
    Int dim = dim_parabolic_pair(q, d, k, f);
    for (std::size_t v = 0; v < r.size(); ++v) dim -= (r[v] - k[v]) * (r[v] - k0[v]);
    return dim;
}

Int preimage_dim_pplus(const Quiver& q, const IntVec& d, const IntVec& k, const IntVec& f,
                       const IntVec& r) {
    check_dim_vector(q, r, "r");
    IntVec k0_hat = k0_vector(q, vec_sub(d, k, true), f);
    for (std::size_t v = 0; v < r.size(); ++v)
        if (r[v] < k[v] + k0_hat[v] || r[v] < 0)
            throw input_error("preimage stratum requires r >= max(k + k0[d-k], 0)");
    Int dim = dim_parabolic_pair(q, d, k, f);
    for (std::size_t v = 0; v < r.size(); ++v) dim -= r[v] * (r[v] - k[v] - k0_hat[v]);
    return dim;
}

std::pair<Int, Int> excess(const Quiver& q, const IntVec& d0, const IntVec& d1, const IntVec& d2) {
    check_dim_vector(q, d0, "d0");
    if (!vec_le(d1, d0) || !vec_le(d2, d1))
        throw input_error("excess requires d0 >= d1 >= d2 componentwise");
    IntVec k = vec_sub(d0, d1);
    IntVec kp = vec_sub(d1, d2);
    Int r1 = dot(k, kp);
    Int r2 = 0;
    for (std::size_t v = 0; v < k.size(); ++v)
        for (std::size_t w = 0; w < k.size(); ++w)
            r2 += (q.arrow_count(v, w) + q.arrow_count(w, v)) * kp[v] * k[w];
    return {r1, r2};
}

Int half_dim_defect(const Quiver& q, const IntVec& k) {
    check_dim_vector(q, k, "k");
    Int defect = 0;
    for (std::size_t v = 0; v < k.size(); ++v)
        for (std::size_t w = 0; w < k.size(); ++w) defect += q.arrow_count(v, w) * k[v] * k[w];
    return defect;
}

bool is_lagrangian_support(const Quiver& q, const IntVec& k) {
    check_dim_vector(q, k, "k");
    for (std::size_t v = 0; v < k.size(); ++v)
        for (std::size_t w = 0; w < k.size(); ++w)
            if (k[v] != 0 && k[w] != 0 && q.arrow_count(v, w) != 0) return false;
    return true;
}

Int flag_fiber_dim(const ChainDims& chain) {
    if (chain.levels.empty()) throw input_error("chain must have at least one level");
    std::size_t ell = chain.length();
    Int dim = 0;
    for (std::size_t v = 0; v < chain.levels.front().size(); ++v)
        for (std::size_t m1 = 1; m1 <= ell; ++m1) {
            Int kappa1 = chain.levels[m1 - 1][v] - chain.levels[m1][v];
            if (kappa1 < 0) throw input_error("chain dimension vectors must be non-increasing");
            for (std::size_t m2 = m1 + 1; m2 <= ell; ++m2)
                dim += kappa1 * (chain.levels[m2 - 1][v] - chain.levels[m2][v]);
        }
    return dim;
}

} // namespace quiverlab
