// Brute-force ground truth: hulls by exhaustive vertex filtering, lattice
// counts by bounding-box scans. Built on the membership LP and orientation
// only; shares no code with the fast paths it validates.
#pragma once

#include "digiconv/hull2d.hpp"
#include "digiconv/lp.hpp"

namespace digiconv {

inline constexpr i64 kDefaultVolumeCap = 100'000'000;

// Convex hull of a planar set: a point is a vertex iff it is not in the
// hull of the remaining points. O(n) membership tests, each O(n).
Hull2D brute_hull_2d(const PointSet& s);

// Every bounding-box lattice point inside conv(S), any dimension.
std::vector<Point> brute_lattice_points(const PointSet& s, i64 volume_cap = kDefaultVolumeCap,
                                        LpStats* stats = nullptr);

bool brute_is_convex(const PointSet& s, i64 volume_cap = kDefaultVolumeCap, LpStats* stats = nullptr);

// The dilated lattice set S': bounding box expanded by 1, filtered by the
// cube-versus-hull test.
std::vector<Point> brute_dilated_set(const PointSet& s, i64 volume_cap = kDefaultVolumeCap,
                                     LpStats* stats = nullptr);

}  // namespace digiconv
