#include "digiconv/generators.hpp"

#include <algorithm>
#include <cmath>

#include "digiconv/lp.hpp"
#include "digiconv/rng.hpp"

namespace digiconv {
namespace {

// Points produced in sorted order without duplicates skip the dedup pass.
PointSet from_sorted_unique(std::vector<Point> pts, int dim) {
    PointSet s;
    s.dim = dim;
    if (!pts.empty()) {
        s.lo.assign(static_cast<std::size_t>(dim), 0);
        s.hi.assign(static_cast<std::size_t>(dim), 0);
        for (int a = 0; a < dim; ++a) s.lo[static_cast<std::size_t>(a)] = s.hi[static_cast<std::size_t>(a)] = pts[0][static_cast<std::size_t>(a)];
        for (const Point& p : pts) {
            for (int a = 0; a < dim; ++a) {
                s.lo[static_cast<std::size_t>(a)] = std::min(s.lo[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(a)]);
                s.hi[static_cast<std::size_t>(a)] = std::max(s.hi[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(a)]);
            }
        }
    }
    s.points = std::move(pts);
    return s;
}

i64 isqrt(i64 v) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Full-dimensional check of the affine hull of rational points, by Gaussian
// elimination on the difference vectors.
bool affinely_full_dimensional(const std::vector<std::vector<BigRational>>& gens, int d) {
    if (static_cast<int>(gens.size()) < d + 1) return false;
    std::vector<std::vector<BigRational>> rows;
    for (std::size_t i = 1; i < gens.size(); ++i) {
        std::vector<BigRational> row(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            row[static_cast<std::size_t>(j)] = gens[i][static_cast<std::size_t>(j)] - gens[0][static_cast<std::size_t>(j)];
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < d; ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][static_cast<std::size_t>(col)] == 0) continue;
            BigRational factor = rows[r][static_cast<std::size_t>(col)] / rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            for (int j = col; j < d; ++j) {
                rows[r][static_cast<std::size_t>(j)] -= factor * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
            }
        }
        ++rank;
        if (rank == d) return true;
    }
    return false;
}

}  // namespace

PointSet gen_ball(int d, i64 radius_squared, const Point& center) {
    if (d < 1) throw input_error("gen_ball requires d >= 1");
    if (radius_squared < 0) throw input_error("gen_ball requires radius_squared >= 0");
    if (static_cast<int>(center.size()) != d) throw input_error("gen_ball center dimension mismatch");

    const i64 r = isqrt(radius_squared);
    std::vector<Point> pts;
    Point p(center.begin(), center.end());
    for (int a = 0; a < d; ++a) p[static_cast<std::size_t>(a)] -= r;
    while (true) {
        i128 dist2 = 0;
        for (int a = 0; a < d; ++a) {
            i64 delta = p[static_cast<std::size_t>(a)] - center[static_cast<std::size_t>(a)];
            dist2 += i128(delta) * delta;
        }
        if (dist2 <= radius_squared) pts.push_back(p);

        int axis = d - 1;
        while (axis >= 0 && p[static_cast<std::size_t>(axis)] == center[static_cast<std::size_t>(axis)] + r) {
            p[static_cast<std::size_t>(axis)] = center[static_cast<std::size_t>(axis)] - r;
            --axis;
        }
        if (axis < 0) break;
        ++p[static_cast<std::size_t>(axis)];
    }
    return from_sorted_unique(std::move(pts), d);
}

PointSet gen_random_polytope_points(int d, int num_generators, i64 half_width, std::uint64_t seed) {
    if (d < 1) throw input_error("gen_random_polytope_points requires d >= 1");
    if (num_generators < d + 1) throw input_error("need at least d+1 generator points");
    if (half_width < 1) throw input_error("half_width must be positive");

    for (int attempt = 0; attempt < 64; ++attempt, ++seed) {
        SplitMix64 rng(seed);
        std::vector<std::vector<BigRational>> gens;
        gens.reserve(static_cast<std::size_t>(num_generators));
        for (int i = 0; i < num_generators; ++i) {
            std::vector<BigRational> g(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) {
                i64 numerator = rng.next_in_range(-8 * half_width, 8 * half_width);
                g[static_cast<std::size_t>(j)] = BigRational(numerator, 8);
            }
            gens.push_back(std::move(g));
        }
        if (!affinely_full_dimensional(gens, d)) continue;

        std::vector<i64> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            BigRational mn = gens[0][static_cast<std::size_t>(j)], mx = mn;
            for (const auto& g : gens) {
                mn = std::min(mn, g[static_cast<std::size_t>(j)]);
                mx = std::max(mx, g[static_cast<std::size_t>(j)]);
            }
            // floor/ceil of the rational extremes
            auto num = boost::multiprecision::numerator(mn);
            auto den = boost::multiprecision::denominator(mn);
            boost::multiprecision::cpp_int fl = num / den;
            if (num < 0 && num % den != 0) --fl;
            lo[static_cast<std::size_t>(j)] = fl.convert_to<i64>();
            num = boost::multiprecision::numerator(mx);
            den = boost::multiprecision::denominator(mx);
            boost::multiprecision::cpp_int ce = num / den;
            if (num > 0 && num % den != 0) ++ce;
            hi[static_cast<std::size_t>(j)] = ce.convert_to<i64>();
        }

        std::vector<Point> pts;
        Point p(lo.begin(), lo.end());
        while (true) {
            if (in_hull_of_rationals(p, gens)) pts.push_back(p);
            int axis = d - 1;
            while (axis >= 0 && p[static_cast<std::size_t>(axis)] == hi[static_cast<std::size_t>(axis)]) {
                p[static_cast<std::size_t>(axis)] = lo[static_cast<std::size_t>(axis)];
                --axis;
            }
            if (axis < 0) break;
            ++p[static_cast<std::size_t>(axis)];
        }
        if (pts.empty()) continue;  // hull too thin to capture a lattice point
        return from_sorted_unique(std::move(pts), d);
    }
    throw generation_error("no full-dimensional lattice-capturing sample after 64 seeds");
}

PointSet gen_punctured(const PointSet& base, std::uint64_t seed) {
    std::vector<std::size_t> removable;
    for (std::size_t i = 0; i < base.points.size(); ++i) {
        std::vector<Point> others;
        others.reserve(base.points.size() - 1);
        for (std::size_t j = 0; j < base.points.size(); ++j) {
            if (j != i) others.push_back(base.points[j]);
        }
        if (others.empty()) continue;
        PointSet rest = validate_input(others, base.dim);
        if (in_convex_hull_lattice(base.points[i], rest)) removable.push_back(i);
    }
    if (removable.empty()) {
        throw generation_error("set has no removable point; every point is needed by the hull");
    }
    SplitMix64 rng(seed);
    std::size_t pick = removable[static_cast<std::size_t>(rng.next_below(removable.size()))];
    std::vector<Point> remaining;
    for (std::size_t j = 0; j < base.points.size(); ++j) {
        if (j != pick) remaining.push_back(base.points[j]);
    }
    return validate_input(remaining, base.dim);
}

PointSet gen_skewed_pair(i64 k) {
    if (k < 1) throw input_error("gen_skewed_pair requires k >= 1");
    if (k > kCoordLimit / 2) throw input_error("k too large for the coordinate bound");
    return validate_input({{0, 0}, {1, 2 * k}}, 2);
}

}  // namespace digiconv
