// Digital convexity in any fixed dimension: depth-first traversal of the
// dilated lattice set S' (points whose centered unit cube meets conv(S),
// a 2d-connected superset of conv(S) ∩ Z^d), with hull membership decided
// per point by exact linear programming.
#pragma once

#include "digiconv/report.hpp"

namespace digiconv {

enum class NdVariant {
    count,       // count |conv(S) ∩ Z^d| over S' and compare with |S|
    early_exit,  // stop at the first hull point outside S
};

struct NdOptions {
    // Refused when the bounding box expanded by 1 holds more lattice points
    // than this; |S'| is bounded by that volume.
    i64 volume_cap = 100'000'000;
};

// `visited_out`, when given, receives the traversed points of S' in visit
// order (the full S' unless the early-exit variant aborts).
ConvexityReport is_digital_convex_nd(const PointSet& s, NdVariant variant, const NdOptions& opts = {},
                                     std::vector<Point>* visited_out = nullptr);

// All points of conv(S) ∩ Z^d missing from S, in lexicographic order.
std::vector<Point> enumerate_missing(const PointSet& s, const NdOptions& opts = {});

}  // namespace digiconv
