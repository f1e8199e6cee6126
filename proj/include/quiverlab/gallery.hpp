#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quiverlab/rep.hpp"

namespace quiverlab {

/// Weakly decreasing positive parts.
struct Partition {
    std::vector<Int> parts;

    Int size() const;
    bool valid() const;
};

Partition partition_from_string(const std::string& text); // "2,1" or ""

/// Cells (a, b) of the Young diagram, ordered row-major by b then a.
std::vector<std::pair<Int, Int>> partition_cells(const Partition& p);

/// Number of cells whose east and north neighbors fall outside the diagram.
Int corner_count(const Partition& p);

/// The Jordan quiver: one vertex "v" with one loop "x".
Quiver jordan_quiver();
/// One vertex "v", no arrows.
Quiver a1_quiver();
/// Equioriented type A: vertices "v1".."vn", arrows "a1".."a(n-1)".
Quiver an_quiver(std::size_t n);

/// Torus-fixed point of the Jordan quiver with f = 1: basis indexed by the
/// cells of the partition, the loop pair shifting in each coordinate, the
/// framing hitting the origin cell.
FramedRep hilb_fixed_point(const Partition& p);

/// Same with a kernel flag spanned by the first k corner cells.
ParabolicPoint hilb_fixed_point_with_flag(const Partition& p, Int k);

/// Diagonal pair of commuting matrices on pairwise distinct planar points,
/// framing vector all ones.
FramedRep hilb_distinct_points(const std::vector<std::pair<Rational, Rational>>& points);

/// Single-vertex point with i = [I | 0] and j of rank d-k supported in
/// ker(i); flag = leading coordinates of ker(j). Requires
/// max(0, 2d-f) <= k <= d <= f.
ParabolicPoint a1_point(Int d, Int f, Int k);

/// Coordinate-projection representation of the equioriented type A quiver,
/// framed at the first vertex. Requires f >= d_1 >= ... >= d_n.
FramedRep an_flag_point(const IntVec& d, Int f);

enum class GalleryFamily { HilbMonomial, HilbDistinct, A1, An };

GalleryFamily gallery_family_from_string(const std::string& name);
std::string to_string(GalleryFamily family);

/// Deterministic in the seed (mt19937_64 seeded directly); every output
/// passes the flatness and stability checks.
ParabolicPoint random_gallery_point(GalleryFamily family, std::uint64_t seed);

} // namespace quiverlab
