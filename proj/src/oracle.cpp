#include "digiconv/oracle.hpp"

#include <algorithm>

namespace digiconv {
namespace {

// Walks every lattice point of [lo, hi] in lexicographic order.
template <class F>
void scan_box(const std::vector<i64>& lo, const std::vector<i64>& hi, F&& visit) {
    const int d = static_cast<int>(lo.size());
    Point p(lo.begin(), lo.end());
    while (true) {
        visit(p);
        int axis = d - 1;
        while (axis >= 0 && p[static_cast<std::size_t>(axis)] == hi[static_cast<std::size_t>(axis)]) {
            p[static_cast<std::size_t>(axis)] = lo[static_cast<std::size_t>(axis)];
            --axis;
        }
        if (axis < 0) return;
        ++p[static_cast<std::size_t>(axis)];
    }
}

void check_volume(const std::vector<i64>& lo, const std::vector<i64>& hi, i64 cap) {
    i128 volume = 1;
    for (std::size_t a = 0; a < lo.size(); ++a) {
        volume *= i128(hi[a] - lo[a] + 1);
        if (volume > cap) {
            throw resource_error("bounding-box volume exceeds the cap of " + std::to_string(cap) + " points");
        }
    }
}

}  // namespace

Hull2D brute_hull_2d(const PointSet& s) {
    if (s.dim != 2) throw input_error("brute_hull_2d requires d = 2");
    if (s.empty()) return make_hull_empty();
    if (s.size() == 1) return make_hull_point(as_p2(s)[0]);

    std::vector<P2> vertices;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        std::vector<Point> others;
        others.reserve(s.points.size() - 1);
        for (std::size_t j = 0; j < s.points.size(); ++j) {
            if (j != i) others.push_back(s.points[j]);
        }
        PointSet rest = validate_input(others, 2);
        if (!in_convex_hull_lattice(s.points[i], rest)) {
            vertices.push_back(P2{s.points[i][0], s.points[i][1]});
        }
    }

    if (vertices.size() == 1) return make_hull_point(vertices[0]);
    if (vertices.size() == 2) return make_hull_segment(vertices[0], vertices[1]);

    // CCW order by angular sort around the lexicographically smallest vertex.
    P2 pivot = *std::min_element(vertices.begin(), vertices.end());
    std::sort(vertices.begin(), vertices.end(), [&pivot](const P2& p, const P2& q) {
        if (p == pivot) return q != pivot;
        if (q == pivot) return false;
        int o = orientation(pivot, p, q);
        if (o == 0) throw internal_error("collinear hull vertices in the brute-force hull");
        return o > 0;
    });
    return make_hull(std::move(vertices));
}

std::vector<Point> brute_lattice_points(const PointSet& s, i64 volume_cap, LpStats* stats) {
    std::vector<Point> found;
    if (s.empty()) return found;
    check_volume(s.lo, s.hi, volume_cap);
    scan_box(s.lo, s.hi, [&](const Point& p) {
        if (in_convex_hull_lattice(p, s, stats)) found.push_back(p);
    });
    return found;
}

bool brute_is_convex(const PointSet& s, i64 volume_cap, LpStats* stats) {
    if (s.empty()) return true;
    return brute_lattice_points(s, volume_cap, stats).size() == s.size();
}

std::vector<Point> brute_dilated_set(const PointSet& s, i64 volume_cap, LpStats* stats) {
    std::vector<Point> found;
    if (s.empty()) return found;
    std::vector<i64> lo = s.lo, hi = s.hi;
    for (std::size_t a = 0; a < lo.size(); ++a) {
        lo[a] -= 1;
        hi[a] += 1;
    }
    check_volume(lo, hi, volume_cap);
    scan_box(lo, hi, [&](const Point& p) {
        if (cube_intersects_hull(p, s, stats)) found.push_back(p);
    });
    return found;
}

}  // namespace digiconv
