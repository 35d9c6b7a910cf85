#include "digiconv/core.hpp"

#include <algorithm>
#include <set>

namespace digiconv {

PointSet validate_input(const std::vector<Point>& raw, int dim) {
    if (dim < 1) throw input_error("dimension must be >= 1, got " + std::to_string(dim));
    PointSet s;
    s.dim = dim;
    std::set<Point> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Point& p = raw[i];
        if (static_cast<int>(p.size()) != dim) {
            throw input_error("point " + std::to_string(i) + " has " + std::to_string(p.size()) +
                              " coordinates, expected " + std::to_string(dim));
        }
        for (i64 c : p) {
            if (c < -kCoordLimit || c > kCoordLimit) {
                throw input_error("coordinate " + std::to_string(c) + " out of range [-2^30, 2^30] at point " +
                                  std::to_string(i));
            }
        }
        if (!seen.insert(p).second) {
            s.had_duplicates = true;
            continue;
        }
        s.points.push_back(p);
    }
    if (!s.points.empty()) {
        s.lo.assign(dim, 0);
        s.hi.assign(dim, 0);
        for (int a = 0; a < dim; ++a) {
            s.lo[a] = s.hi[a] = s.points[0][a];
        }
        for (const Point& p : s.points) {
            for (int a = 0; a < dim; ++a) {
                s.lo[a] = std::min(s.lo[a], p[a]);
                s.hi[a] = std::max(s.hi[a], p[a]);
            }
        }
    }
    return s;
}

PointSet point_set_2d(const std::vector<P2>& pts) {
    std::vector<Point> raw;
    raw.reserve(pts.size());
    for (const P2& p : pts) raw.push_back({p.x, p.y});
    return validate_input(raw, 2);
}

std::vector<P2> as_p2(const PointSet& s) {
    if (s.dim != 2) throw input_error("expected a 2D point set, got d=" + std::to_string(s.dim));
    std::vector<P2> out;
    out.reserve(s.points.size());
    for (const Point& p : s.points) out.push_back({p[0], p[1]});
    return out;
}

i128 cross2(const P2& a, const P2& b, const P2& c) {
    return i128(b.x - a.x) * i128(c.y - a.y) - i128(b.y - a.y) * i128(c.x - a.x);
}

int orientation(const P2& a, const P2& b, const P2& c) {
    i128 v = cross2(a, b, c);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

int orientation(const Point& a, const Point& b, const Point& c) {
    if (a.size() != 2 || b.size() != 2 || c.size() != 2) {
        throw input_error("orientation requires 2D points");
    }
    return orientation(P2{a[0], a[1]}, P2{b[0], b[1]}, P2{c[0], c[1]});
}

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 segment_lattice_count(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw input_error("segment endpoints have different dimensions");
    i64 g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) g = gcd_i64(g, b[i] - a[i]);
    return g + 1;  // g == 0 for a == b
}

i64 segment_lattice_count(const P2& a, const P2& b) {
    return gcd_i64(b.x - a.x, b.y - a.y) + 1;
}

i64 diameter_linf(const PointSet& s) {
    if (s.empty()) throw input_error("diameter of an empty set is undefined");
    i64 r = 0;
    for (int a = 0; a < s.dim; ++a) r = std::max(r, s.hi[a] - s.lo[a]);
    return r;
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string out;
    while (u > 0) {
        out.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

std::string to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    out += ")";
    return out;
}

}  // namespace digiconv
