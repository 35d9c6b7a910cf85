// Deterministic, seeded instance generators: digital convex sets by
// construction, near-convex negatives, and the two-point family whose
// dilated set S' grows without bound relative to |S|.
#pragma once

#include "digiconv/core.hpp"

namespace digiconv {

struct generation_error : std::runtime_error {
    explicit generation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// All lattice points p with ||p - center||^2 <= radius_squared.
PointSet gen_ball(int d, i64 radius_squared, const Point& center);

// Lattice points inside the hull of `num_generators` seeded random rational
// points (coordinates k/8) in the box [-half_width, half_width]^d. Samples
// whose affine hull is not full-dimensional, or whose hull captures no
// lattice point, are regenerated with the next seed.
PointSet gen_random_polytope_points(int d, int num_generators, i64 half_width, std::uint64_t seed);

// Removes one seeded-random point that stays inside the hull of the rest;
// the result is never digital convex. Throws generation_error when no point
// qualifies.
PointSet gen_punctured(const PointSet& base, std::uint64_t seed);

// The pair {(0,0), (1,2k)}: its |S'| / |S| ratio is at least k.
PointSet gen_skewed_pair(i64 k);

}  // namespace digiconv
