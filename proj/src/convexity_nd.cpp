#include "digiconv/convexity_nd.hpp"

#include <algorithm>
#include <unordered_set>

#include "digiconv/lp.hpp"

namespace digiconv {
namespace {

void check_volume_cap(const PointSet& s, i64 cap) {
    i128 volume = 1;
    for (int a = 0; a < s.dim; ++a) {
        volume *= i128(s.hi[static_cast<std::size_t>(a)] - s.lo[static_cast<std::size_t>(a)] + 3);
        if (volume > cap) {
            throw resource_error("dilated bounding box exceeds the volume cap of " + std::to_string(cap) +
                                 "; raise it explicitly to proceed");
        }
    }
}

}  // namespace

ConvexityReport is_digital_convex_nd(const PointSet& s, NdVariant variant, const NdOptions& opts,
                                     std::vector<Point>* visited_out) {
    if (s.empty()) throw input_error("fixed-dimension tester requires a nonempty set");
    check_volume_cap(s, opts.volume_cap);

    ConvexityReport rep;
    rep.algorithm = variant == NdVariant::count ? "nd-count" : "nd-early";
    rep.n = static_cast<long long>(s.size());
    rep.duplicates_dropped = s.had_duplicates;

    LpStats stats;
    std::unordered_set<Point, PointHash> members(s.points.begin(), s.points.end());
    std::unordered_set<Point, PointHash> visited;
    std::vector<Point> stack;

    // The stack starts with S itself; every point of S is in S'.
    for (const Point& p : s.points) {
        visited.insert(p);
        stack.push_back(p);
    }

    long long s_prime = 0;
    long long hull_points = 0;
    long long peak = static_cast<long long>(stack.size());

    auto finish = [&](Verdict verdict, Reason reason) {
        rep.verdict = verdict;
        rep.reason = reason;
        rep.s_prime_size = s_prime;
        rep.lp_calls = stats.lp_calls;
        rep.peak_frontier = peak;
        return rep;
    };

    while (!stack.empty()) {
        Point x = std::move(stack.back());
        stack.pop_back();
        ++s_prime;
        if (visited_out) visited_out->push_back(x);

        if (members.count(x)) {
            ++hull_points;
        } else if (in_convex_hull_lattice(x, s, &stats)) {
            if (variant == NdVariant::early_exit) {
                rep.gap_point = x;
                return finish(Verdict::not_convex, Reason::count_mismatch);
            }
            ++hull_points;
        }

        // Fixed neighbor order +e1, -e1, +e2, -e2, ...
        for (int axis = 0; axis < s.dim; ++axis) {
            for (int dir = +1; dir >= -1; dir -= 2) {
                Point y = x;
                y[static_cast<std::size_t>(axis)] += dir;
                if (visited.count(y)) continue;
                if (!cube_intersects_hull(y, s, &stats)) continue;
                visited.insert(y);
                stack.push_back(y);
                peak = std::max(peak, static_cast<long long>(stack.size()));
            }
        }
    }

    if (variant == NdVariant::count) {
        rep.hull_lattice_count = hull_points;
        if (hull_points != rep.n) return finish(Verdict::not_convex, Reason::count_mismatch);
    }
    return finish(Verdict::convex, Reason::confirmed);
}

std::vector<Point> enumerate_missing(const PointSet& s, const NdOptions& opts) {
    if (s.empty()) throw input_error("fixed-dimension tester requires a nonempty set");
    check_volume_cap(s, opts.volume_cap);

    LpStats stats;
    std::unordered_set<Point, PointHash> members(s.points.begin(), s.points.end());
    std::unordered_set<Point, PointHash> visited;
    std::vector<Point> stack;
    for (const Point& p : s.points) {
        visited.insert(p);
        stack.push_back(p);
    }

    std::vector<Point> missing;
    while (!stack.empty()) {
        Point x = std::move(stack.back());
        stack.pop_back();
        if (!members.count(x) && in_convex_hull_lattice(x, s, &stats)) missing.push_back(x);
        for (int axis = 0; axis < s.dim; ++axis) {
            for (int dir = +1; dir >= -1; dir -= 2) {
                Point y = x;
                y[static_cast<std::size_t>(axis)] += dir;
                if (visited.count(y)) continue;
                if (!cube_intersects_hull(y, s, &stats)) continue;
                visited.insert(y);
                stack.push_back(y);
            }
        }
    }
    std::sort(missing.begin(), missing.end());
    return missing;
}

}  // namespace digiconv
