// Strictly convex lattice polygon, counterclockwise vertex cycle.
#pragma once

#include "digiconv/core.hpp"

namespace digiconv {

struct Hull2D {
    enum class Shape { empty, point, segment, full };

    Shape shape = Shape::empty;
    // CCW cycle, rotated so the lexicographically smallest vertex comes
    // first; no three consecutive vertices are collinear. A segment keeps
    // just its two endpoints, a point one vertex.
    std::vector<P2> vertices;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const {
        switch (shape) {
            case Shape::full: return vertices.size();
            case Shape::segment: return 1;
            default: return 0;
        }
    }

    friend bool operator==(const Hull2D& a, const Hull2D& b) {
        return a.shape == b.shape && a.vertices == b.vertices;
    }
};

// Builds a hull from an already-convex CCW vertex cycle; validates strict
// convexity and canonicalizes the rotation. Throws internal_error on a
// malformed cycle.
Hull2D make_hull(std::vector<P2> ccw_cycle);

// Degenerate constructors.
Hull2D make_hull_point(const P2& p);
Hull2D make_hull_segment(const P2& a, const P2& b);
Hull2D make_hull_empty();

}  // namespace digiconv
