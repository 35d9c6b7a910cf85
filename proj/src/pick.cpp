#include "digiconv/pick.hpp"

namespace digiconv {

i128 twice_area(const Hull2D& hull) {
    if (hull.shape != Hull2D::Shape::full) return 0;
    const std::vector<P2>& v = hull.vertices;
    i128 acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const P2& a = v[i];
        const P2& b = v[(i + 1) % v.size()];
        acc += i128(a.x) * i128(b.y) - i128(a.y) * i128(b.x);
    }
    if (acc < 0) throw internal_error("negative shoelace sum for a CCW hull");
    return acc;
}

i64 boundary_count(const Hull2D& hull) {
    switch (hull.shape) {
        case Hull2D::Shape::empty:
            throw input_error("boundary count of an empty hull");
        case Hull2D::Shape::point:
            return 1;
        case Hull2D::Shape::segment:
            return segment_lattice_count(hull.vertices[0], hull.vertices[1]);
        case Hull2D::Shape::full:
            break;
    }
    const std::vector<P2>& v = hull.vertices;
    i64 total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const P2& a = v[i];
        const P2& b = v[(i + 1) % v.size()];
        total += gcd_i64(b.x - a.x, b.y - a.y);  // lattice points on edge, far endpoint excluded
    }
    return total;
}

i64 lattice_count(const Hull2D& hull) {
    switch (hull.shape) {
        case Hull2D::Shape::empty:
            throw input_error("lattice count of an empty hull");
        case Hull2D::Shape::point:
        case Hull2D::Shape::segment:
            return boundary_count(hull);
        case Hull2D::Shape::full:
            break;
    }
    i128 a2 = twice_area(hull);
    i64 b = boundary_count(hull);
    i128 total2 = a2 + b;
    if (total2 % 2 != 0) {
        throw internal_error("Pick parity violated: twice_area + boundary_count is odd");
    }
    return static_cast<i64>(total2 / 2) + 1;
}

}  // namespace digiconv
