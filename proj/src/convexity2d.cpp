#include "digiconv/convexity2d.hpp"

#include "digiconv/pick.hpp"

namespace digiconv {

const char* to_string(Verdict v) { return v == Verdict::convex ? "convex" : "not_convex"; }

const char* to_string(Reason r) {
    switch (r) {
        case Reason::confirmed: return "confirmed";
        case Reason::early_stop: return "early_stop";
        case Reason::count_mismatch: return "count_mismatch";
    }
    return "?";
}

ConvexityReport is_digital_convex_2d(const PointSet& s) {
    if (s.dim != 2) throw input_error("planar tester requires d = 2, got d=" + std::to_string(s.dim));

    ConvexityReport rep;
    rep.algorithm = "2d";
    rep.n = static_cast<long long>(s.size());
    rep.duplicates_dropped = s.had_duplicates;

    if (s.empty()) {
        // conv(emptyset) has no lattice points, so the empty set is convex.
        rep.verdict = Verdict::convex;
        rep.reason = Reason::confirmed;
        rep.hull = make_hull_empty();
        rep.hull_edge_count = 0;
        rep.hull_lattice_count = 0;
        return rep;
    }

    // Degenerate sets are decided by counting segment lattice points; the
    // quickhull loop assumes a full-dimensional hull.
    std::vector<P2> pts = as_p2(s);
    bool collinear = true;
    for (std::size_t i = 2; i < pts.size() && collinear; ++i) {
        collinear = orientation(pts[0], pts[1], pts[i]) == 0;
    }
    if (collinear) {
        P2 lo = pts[0], hi = pts[0];
        for (const P2& p : pts) {
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        Hull2D hull = make_hull_segment(lo, hi);
        i64 count = boundary_count(hull);
        rep.hull = hull;
        rep.hull_edge_count = static_cast<long long>(hull.edge_count());
        rep.hull_lattice_count = count;
        if (count == rep.n) {
            rep.verdict = Verdict::convex;
            rep.reason = Reason::confirmed;
        } else {
            rep.verdict = Verdict::not_convex;
            rep.reason = Reason::count_mismatch;
        }
        return rep;
    }

    QuickhullResult qh = quickhull_traced(s, /*early_stop=*/true);
    rep.work = qh.trace.total_candidate_scans();
    rep.steps = static_cast<long long>(qh.trace.steps.size());

    if (qh.early_stopped) {
        rep.verdict = Verdict::not_convex;
        rep.reason = Reason::early_stop;
        return rep;
    }

    i64 count = lattice_count(*qh.hull);
    rep.hull = std::move(qh.hull);
    rep.hull_edge_count = static_cast<long long>(rep.hull->edge_count());
    rep.hull_lattice_count = count;
    if (count == rep.n) {
        rep.verdict = Verdict::convex;
        rep.reason = Reason::confirmed;
    } else {
        rep.verdict = Verdict::not_convex;
        rep.reason = Reason::count_mismatch;
    }
    return rep;
}

}  // namespace digiconv
