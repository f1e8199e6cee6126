#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "quiverlab/errors.hpp"

namespace quiverlab {

using Int = long long;

struct Arrow {
    std::string id;
    std::string out; // source vertex label
    std::string in;  // target vertex label
};

/// Finite directed multigraph; loops and parallel arrows allowed. Vertex
/// declaration order is the canonical index order for every matrix and
/// vector derived from the quiver.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
           std::vector<bool> framing_flags = {});

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t vertex_index(const std::string& label) const;
    bool has_vertex(const std::string& label) const;
    bool is_framing_vertex(std::size_t index) const { return framing_[index]; }
    bool any_framing_vertex() const;

    /// Number of arrows v -> w (direction-sensitive).
    Int arrow_count(const std::string& v, const std::string& w) const;
    Int arrow_count(std::size_t v, std::size_t w) const;
    Int loop_count(std::size_t v) const { return arrow_count(v, v); }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<bool> framing_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<Int>> counts_; // counts_[v][w] = #arrows v->w
};

/// Integer vector indexed by the vertex order of an ambient quiver.
/// Entries may be negative; non-negativity is the caller's concern.
struct IntVec {
    std::vector<Int> entries;

    IntVec() = default;
    explicit IntVec(std::size_t n, Int fill = 0) : entries(n, fill) {}
    explicit IntVec(std::vector<Int> e) : entries(std::move(e)) {}

    std::size_t size() const { return entries.size(); }
    Int& operator[](std::size_t i) { return entries[i]; }
    Int operator[](std::size_t i) const { return entries[i]; }
    bool operator==(const IntVec& o) const { return entries == o.entries; }
    bool operator!=(const IntVec& o) const { return !(*this == o); }

    bool is_zero() const;
    bool all_nonneg() const;
    Int sum() const;
};

/// Unit coordinate vector at the given index.
IntVec delta(std::size_t n, std::size_t index);

IntVec vec_add(const IntVec& a, const IntVec& b);
/// Componentwise difference; throws input_error if any entry would be
/// negative and require_nonneg is set.
IntVec vec_sub(const IntVec& a, const IntVec& b, bool require_nonneg = false);
bool vec_le(const IntVec& a, const IntVec& b); // componentwise a <= b
IntVec vec_max(const IntVec& a, const IntVec& b);
IntVec vec_max(const IntVec& a, Int floor);

using IntMatrix = std::vector<std::vector<Int>>;

/// Cartan matrix C_vw = 2 delta_vw - |Q1(v,w)| - |Q1(w,v)|. Symmetric;
/// diagonal 2 - 2*(loops at v).
IntMatrix cartan(const Quiver& q);

IntVec mat_apply(const IntMatrix& m, const IntVec& v);
Int bilinear(const IntVec& a, const IntMatrix& m, const IntVec& b);
Int dot(const IntVec& a, const IntVec& b);

/// Double quiver: every arrow e gets a reversal e* (id "<id>*").
Quiver double_quiver(const Quiver& q);

/// Framed quiver: one framing vertex per vertex (label "<v>~", flagged)
/// with an arrow "<v>~" -> v (id "f:<v>").
Quiver framed_quiver(const Quiver& q);

enum class RepetitionVariant { Plain, Framed, FramedDouble };

/// Repetition quiver on vertex set Q0 x {0..level}. Level arrows are copies
/// "<id>@m" of the original arrows, plus "p:<v>@m": (v,m) -> (v,m+1). The
/// framed variants add one framing vertex per original vertex with arrows in
/// both directions to every level copy; FramedDouble doubles the level
/// arrows only, never the p arrows.
Quiver repetition(const Quiver& q, Int level, RepetitionVariant variant);

/// k0_v = 2 d_v - sum_w (|Q1(v,w)|+|Q1(w,v)|) d_w - f_v = (C d - f)_v.
IntVec k0_vector(const Quiver& q, const IntVec& d, const IntVec& f);

void check_dim_vector(const Quiver& q, const IntVec& v, const char* name);

} // namespace quiverlab
