// Shared helpers for the test suites: seeded instance sampling and
// independent oracles that deliberately avoid the library's fast paths.
#pragma once

#include <algorithm>
#include <vector>

#include "digiconv/core.hpp"
#include "digiconv/rational.hpp"
#include "digiconv/rng.hpp"

namespace digiconv::testutil {

inline PointSet random_set(SplitMix64& rng, int dim, int max_points, i64 lo, i64 hi) {
    int n = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_points))) + 1;
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        Point p(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) p[static_cast<std::size_t>(j)] = rng.next_in_range(lo, hi);
        pts.push_back(std::move(p));
    }
    return validate_input(pts, dim);
}

// Membership via affine combinations: x is in conv(S) iff some affinely
// independent subset of at most d+1 points contains it with nonnegative
// barycentric coordinates. Exhaustive over subsets; exact rational solve.
// Only for tiny instances.
bool in_hull_affine_oracle(const Point& x, const PointSet& s);

// Exact test of "closed unit cube centered at x meets the closed segment
// [a, b]": clips the segment parameter interval axis by axis.
bool segment_meets_cube_oracle(const Point& x, const Point& a, const Point& b);

}  // namespace digiconv::testutil
