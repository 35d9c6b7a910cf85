// Quickhull specialized for lattice input.
//
// Beyond the textbook algorithm, the planar lattice setting changes two
// things. When several candidates are equally farthest from an edge they sit
// on a common line parallel to it; the first and last lattice points of that
// run become hull vertices and the whole run is dropped. And candidates
// landing exactly on a partial-hull edge are dropped immediately. On digital
// convex input every step then discards at least as many candidates as it
// preserves, which is what the optional early-stop monitors.
//
// Every step is traced: candidate counts before/after, discard and promotion
// totals, and per-promotion area accounting (the discarded region versus the
// two surviving search triangles, whose outer corners are rational).
#pragma once

#include <optional>

#include "digiconv/hull2d.hpp"
#include "digiconv/rational.hpp"

namespace digiconv {

// One hull-vertex insertion: vertex d promoted on edge ab (or first/last of
// a collinear farthest run). The discarded region is the triangle abd — a
// trapezoid when two vertices are promoted — and the preserved regions are
// the triangles cut off above a and b by the line through the promoted
// vertices parallel to ab.
struct PromotionEvent {
    P2 edge_a;
    P2 edge_b;
    std::vector<P2> promoted;  // size 1 or 2 (CCW order between a and b)
    i128 twice_discarded_area = 0;
    BigRational twice_preserved_a;  // triangle (a, promoted.front(), e)
    BigRational twice_preserved_b;  // triangle (promoted.back(), b, f)
};

struct StepRecord {
    long long remaining_before = 0;
    long long discarded = 0;
    long long promoted = 0;
    long long remaining_after = 0;
    std::vector<PromotionEvent> events;
};

struct QuickhullTrace {
    long long input_size = 0;
    long long initial_discarded = 0;     // absorbed by the initial polygon
    long long candidates_after_init = 0;
    std::vector<StepRecord> steps;

    // Work charged to the decimation loop: each step scans its candidates once.
    long long total_candidate_scans() const {
        long long total = 0;
        for (const StepRecord& s : steps) total += s.remaining_before;
        return total;
    }
};

// An unconfirmed edge of the partial hull with its candidate bucket. The
// supporting line at each endpoint (outward normal, line through the
// endpoint) bounds the triangle the bucket lives in.
struct ActiveEdge {
    P2 a;
    P2 b;
    P2 support_a;  // outward normal of the supporting line through a
    P2 support_b;
    std::vector<P2> bucket;
};

struct PartialHull {
    std::vector<std::pair<P2, P2>> confirmed;  // directed hull edges a -> b
    std::vector<ActiveEdge> active;
    std::optional<Hull2D> degenerate;  // set when input was a point/segment

    long long candidate_count() const {
        long long total = 0;
        for (const ActiveEdge& e : active) total += static_cast<long long>(e.bucket.size());
        return total;
    }
};

// Builds the initial partial hull (top/bottom extremes plus the two extremes
// normal to their connecting line) and partitions the input into edge
// buckets. Returns the number of points absorbed immediately.
std::pair<PartialHull, long long> initialize_partial_hull(const PointSet& s);

// Processes every active edge once: farthest-candidate promotion, bucket
// splitting, discard accounting.
StepRecord run_step(PartialHull& ph);

struct QuickhullResult {
    bool early_stopped = false;
    std::optional<Hull2D> hull;  // absent iff early_stopped
    QuickhullTrace trace;
};

// Full traced run. With early_stop set, aborts after any step that discards
// fewer candidates than it preserves (2 * remaining_after > remaining_before);
// initialization is exempt from the rule.
QuickhullResult quickhull_traced(const PointSet& s, bool early_stop);

// Checks the partial-hull invariants (bucket points strictly outside their
// own edge only, confined to the edge's supporting triangle). Test support;
// throws internal_error on violation.
void validate_partial_hull(const PartialHull& ph);

}  // namespace digiconv
