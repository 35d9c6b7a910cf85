// Exact convex-hull membership by low-dimensional linear programming.
//
// A query point x lies outside conv(S) iff some hyperplane a·y = b has
// a·s <= b for every s in S and a·x > b. We decide that by maximizing
// a·x - b over the feasibility region {a·s - b <= 0} with a confined to
// [-1,1]^d and b to a box wide enough to hold any supported value:
// the optimum is 0 exactly when x is inside the closed hull.
//
// The maximization runs Seidel's randomized incremental algorithm over the
// d+1 unknowns with exact rational pivots: a 128-bit fraction fast path
// that falls back to arbitrary precision on overflow. Constraint order is
// shuffled by a deterministically seeded generator, so results and
// intermediate states are reproducible.
#pragma once

#include "digiconv/core.hpp"
#include "digiconv/rational.hpp"

namespace digiconv {

struct LpStats {
    long long lp_calls = 0;
    long long bignum_fallbacks = 0;
    long long constraint_rows = 0;  // rows examined across all calls
};

// Query point with exact rational coordinates.
struct RationalPoint {
    std::vector<BigRational> coords;
};

// True iff x is in the closed convex hull of S. Points on faces count as inside.
bool in_convex_hull(const RationalPoint& x, const PointSet& s, LpStats* stats = nullptr);

// Same test for a lattice query point (avoids rational scaling).
// `force_bignum` routes the solve through the arbitrary-precision backend;
// it exists so tests can cross-check the two backends.
bool in_convex_hull_lattice(const Point& x, const PointSet& s, LpStats* stats = nullptr,
                            bool force_bignum = false);

// True iff the unit cube centered at x meets conv(S), i.e. x is in
// conv(S + [-1/2,1/2]^d). Decided over the doubled lattice: 2x against the
// hull of {2s + v : s in S, v in {-1,+1}^d}; the 2^d*n constraint rows are
// enumerated implicitly, never stored.
bool cube_intersects_hull(const Point& x, const PointSet& s, LpStats* stats = nullptr,
                          bool force_bignum = false);

// Membership of a lattice point in the hull of rational generator points
// (all generators share dimension d = x.size()).
bool in_hull_of_rationals(const Point& x, const std::vector<std::vector<BigRational>>& generators,
                          LpStats* stats = nullptr);

}  // namespace digiconv
