// Exact integer predicates and primitive lattice computations.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace digiconv {

using i64 = std::int64_t;
using i128 = __int128;

// Inputs are validated against this bound; 2D cross products of in-range
// coordinates then fit comfortably in 128-bit intermediates (|product| <= 2^62).
inline constexpr i64 kCoordLimit = i64{1} << 30;

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// A lattice point of fixed dimension d >= 1. Coordinates are exact.
using Point = std::vector<i64>;

// 2D lattice point, used by the specialized planar code paths.
struct P2 {
    i64 x = 0;
    i64 y = 0;

    friend bool operator==(const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const P2& a, const P2& b) { return !(a == b); }
    friend bool operator<(const P2& a, const P2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

// Deduplicated finite set of lattice points of one dimension, with its
// bounding box. `had_duplicates` records whether dedup dropped anything.
struct PointSet {
    int dim = 0;
    std::vector<Point> points;
    bool had_duplicates = false;
    std::vector<i64> lo;  // per-axis min; empty when the set is empty
    std::vector<i64> hi;  // per-axis max

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

// Builds a PointSet from raw rows: checks arity, coordinate bounds, dedups.
PointSet validate_input(const std::vector<Point>& raw, int dim);

// Convenience for planar call sites and tests.
PointSet point_set_2d(const std::vector<P2>& pts);
std::vector<P2> as_p2(const PointSet& s);

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const P2& a, const P2& b, const P2& c);
int orientation(const Point& a, const Point& b, const Point& c);

// Exact doubled signed area of triangle abc.
i128 cross2(const P2& a, const P2& b, const P2& c);

// Number of lattice points on the closed segment [a,b]: gcd of |deltas| + 1.
i64 segment_lattice_count(const Point& a, const Point& b);
i64 segment_lattice_count(const P2& a, const P2& b);

// Maximum per-axis extent of the bounding box (L-infinity diameter).
i64 diameter_linf(const PointSet& s);

i64 gcd_i64(i64 a, i64 b);

// FNV-1a over the coordinate words; for unordered containers of Points.
struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (i64 c : p) {
            h ^= static_cast<std::uint64_t>(c);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

std::string to_string(i128 v);
std::string to_string(const Point& p);

}  // namespace digiconv
