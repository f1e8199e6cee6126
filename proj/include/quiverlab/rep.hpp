#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quiverlab/quiver.hpp"
#include "quiverlab/rmatrix.hpp"

namespace quiverlab {

/// A point of the doubled framed representation space: matrices
/// A_e (d_in x d_out), B_e (d_out x d_in) per arrow, i_v (d_v x f_v) and
/// j_v (f_v x d_v) per vertex, all indexed by the quiver's canonical order.
struct FramedRep {
    Quiver quiver;
    IntVec d, f;
    std::vector<RMatrix> A, B;
    std::vector<RMatrix> i, j;
};

/// Shape consistency of the matrix tuple against (d, f); throws input_error.
void check_shapes(const FramedRep& rep);

/// Zero representation (d = 0, all framing spaces kept) for a quiver.
FramedRep zero_rep(const Quiver& q, const IntVec& f);

/// Residual of the moment map at each vertex:
/// sum_{in(e)=v} A_e B_e - sum_{out(e)=v} B_e A_e + i_v j_v.
std::vector<RMatrix> moment_residual(const FramedRep& rep);
bool is_flat(const FramedRep& rep);

struct StabilityWitness {
    bool stable = false;
    /// Saturation of the framing images under all A_e, B_e, per vertex
    /// (canonical column-span bases). Stable iff full at every vertex.
    std::vector<RMatrix> saturated;
};

StabilityWitness is_stable(const FramedRep& rep);

/// Stacked matrix with blocks A_e (out(e)=v), B_e (in(e)=v), j_v; its kernel
/// is Hom(C_v, D).
RMatrix hom_stack(const FramedRep& rep, std::size_t v);
RMatrix hom_basis(const FramedRep& rep, std::size_t v);
Int hom_dim(const FramedRep& rep, std::size_t v);

/// r_v = dim Hom(C_v, D); meaningful for flat stable points, computable for
/// anything with consistent shapes.
IntVec bn_stratum_of(const FramedRep& rep);

/// Representation with per-vertex kernel flags: flags[v] is a list of
/// column-span matrices with strictly increasing ranks, nested, the top one
/// contained in Hom(C_v, D). An empty list means no flag at that vertex.
struct ParabolicPoint {
    FramedRep rep;
    std::vector<std::vector<RMatrix>> flags;

    /// k_v = rank of the top flag step (0 when absent).
    IntVec k_vector() const;
};

/// Chain of representations sharing the framing, with surjections
/// pi[m][v]: level m -> level m+1.
struct ParabolicChainPoint {
    std::vector<FramedRep> levels;
    std::vector<std::vector<RMatrix>> pi;

    std::size_t length() const { return pi.size(); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_rep(const FramedRep& rep);
ValidationReport validate_parabolic_point(const ParabolicPoint& pt);
ValidationReport validate_chain(const ParabolicChainPoint& ch);

struct QuotientResult {
    FramedRep rep;
    /// Projection matrices D_v -> D_v/K_v in the canonical adapted basis.
    std::vector<RMatrix> projection;
    bool flat = false;
    bool stable = false;
};

/// Quotient by per-vertex subspaces K_v annihilated by A, B, j. The
/// complement is the canonical one extending the reduced-echelon kernel
/// basis by standard basis vectors.
QuotientResult quotient_by_K(const FramedRep& rep, const std::vector<RMatrix>& K);

/// Unit-step chain of successive quotients along the flags (vertex order,
/// flag order within a vertex).
ParabolicChainPoint chain_from_flag(const ParabolicPoint& pt);

/// Level-0 representation with flags K_{v,(m)} = ker(composite projection),
/// repeated dimensions dropped.
ParabolicPoint flag_from_chain(const ParabolicChainPoint& ch);

FramedRep pminus(const ParabolicPoint& pt);
FramedRep pplus(const ParabolicPoint& pt);

ParabolicChainPoint forget_first(const ParabolicChainPoint& ch);
ParabolicChainPoint forget_last(const ParabolicChainPoint& ch);

/// Forget the top flag step at v (requires k_v > 0).
ParabolicPoint flag_P_minus_v(const ParabolicPoint& pt, std::size_t v);
/// Quotient by the first flag step at v (requires k_v > 0).
ParabolicPoint flag_P_plus_v(const ParabolicPoint& pt, std::size_t v);

struct TangentReport {
    Int rank_j = 0;
    Int rank_dmu = 0;
    Int lie_dim = 0;      // expected rank of j (injectivity target)
    Int codomain_dim = 0; // expected rank of dmu (surjectivity target)
    Int ambient_dim = 0;  // dim of the constrained representation space
    bool complex_ok = false;
    Int h_dim = 0;
    Int formula_dim = 0;

    bool certified() const {
        return complex_ok && rank_j == lie_dim && rank_dmu == codomain_dim &&
               h_dim == formula_dim;
    }
};

/// Builds the two-step tangent complex Lie(P) -> Rep^k -> sum Hom(Dhat, D)
/// at the point as explicit matrices and certifies injectivity,
/// surjectivity, the zero composition, and the middle homology dimension
/// against the closed dimension formula.
TangentReport tangent_complex(const ParabolicPoint& pt);

/// Dimensions of the fibers through pt of the maps that forget the top flag
/// step at v and quotient by the first flag step at v.
std::pair<Int, Int> fiber_dims_at(const ParabolicPoint& pt, std::size_t v);

/// For a two-step chain: changes basis to split level 0 as
/// D(2) + ker(pi1)-lift + ker(pi0) and verifies the level-0 A_e, B_e keep
/// the stated zero blocks (only the first column group and the bottom-middle
/// block may be nonzero).
bool block_form_check(const ParabolicChainPoint& ch);

/// Invertible matrix whose leading columns span the given nested steps (in
/// order), completed by standard basis vectors; canonical.
RMatrix adapted_basis(std::size_t dim, const std::vector<RMatrix>& steps);

} // namespace quiverlab
