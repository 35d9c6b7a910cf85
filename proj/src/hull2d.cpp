#include "digiconv/hull2d.hpp"

#include <algorithm>

namespace digiconv {

Hull2D make_hull_empty() { return Hull2D{}; }

Hull2D make_hull_point(const P2& p) {
    Hull2D h;
    h.shape = Hull2D::Shape::point;
    h.vertices = {p};
    return h;
}

Hull2D make_hull_segment(const P2& a, const P2& b) {
    if (a == b) return make_hull_point(a);
    Hull2D h;
    h.shape = Hull2D::Shape::segment;
    h.vertices = {std::min(a, b), std::max(a, b)};
    return h;
}

Hull2D make_hull(std::vector<P2> ccw_cycle) {
    if (ccw_cycle.empty()) return make_hull_empty();
    if (ccw_cycle.size() == 1) return make_hull_point(ccw_cycle[0]);
    if (ccw_cycle.size() == 2) return make_hull_segment(ccw_cycle[0], ccw_cycle[1]);

    const std::size_t n = ccw_cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        const P2& a = ccw_cycle[i];
        const P2& b = ccw_cycle[(i + 1) % n];
        const P2& c = ccw_cycle[(i + 2) % n];
        if (orientation(a, b, c) <= 0) {
            throw internal_error("hull cycle is not strictly convex counterclockwise");
        }
    }

    std::size_t lowest = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (ccw_cycle[i] < ccw_cycle[lowest]) lowest = i;
    }
    std::rotate(ccw_cycle.begin(), ccw_cycle.begin() + static_cast<std::ptrdiff_t>(lowest), ccw_cycle.end());

    Hull2D h;
    h.shape = Hull2D::Shape::full;
    h.vertices = std::move(ccw_cycle);
    return h;
}

}  // namespace digiconv
