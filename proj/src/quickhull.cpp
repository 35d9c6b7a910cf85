#include "digiconv/quickhull.hpp"

#include <algorithm>
#include <map>

namespace digiconv {
namespace {

i128 dot(const P2& n, const P2& p) { return i128(n.x) * p.x + i128(n.y) * p.y; }

// Doubled distance of p from the line ab, positive strictly outside the CCW
// hull (right of a->b).
i128 outside_distance(const P2& a, const P2& b, const P2& p) { return -cross2(a, b, p); }

// Twice the (absolute) area of the simple polygon a, b, last, first; the
// unique-farthest case passes first == last and degenerates to triangle abd.
i128 twice_discarded_region(const P2& a, const P2& b, const P2& first, const P2& last) {
    const P2 ring[4] = {a, b, last, first};
    i128 acc = 0;
    for (int i = 0; i < 4; ++i) {
        const P2& u = ring[i];
        const P2& v = ring[(i + 1) % 4];
        acc += i128(u.x) * v.y - i128(u.y) * v.x;
    }
    return acc < 0 ? -acc : acc;
}

struct RationalP2 {
    BigRational x;
    BigRational y;
};

// Intersection of the line through `through` with direction `dir` and the
// supporting line with outward normal `normal` anchored at `anchor`.
RationalP2 line_intersection(const P2& through, const P2& dir, const P2& normal, const P2& anchor) {
    i128 denom = dot(normal, dir);
    if (denom == 0) throw internal_error("supporting line parallel to the processed edge");
    i128 num = dot(normal, P2{anchor.x - through.x, anchor.y - through.y});
    BigRational s(boost::multiprecision::cpp_int(num), boost::multiprecision::cpp_int(denom));
    RationalP2 r;
    r.x = BigRational(through.x) + s * BigRational(dir.x);
    r.y = BigRational(through.y) + s * BigRational(dir.y);
    return r;
}

BigRational twice_triangle_area(const P2& a, const P2& b, const RationalP2& c) {
    BigRational v = (BigRational(b.x) - BigRational(a.x)) * (c.y - BigRational(a.y)) -
                    (BigRational(b.y) - BigRational(a.y)) * (c.x - BigRational(a.x));
    return v < 0 ? BigRational(-v) : v;
}

}  // namespace

std::pair<PartialHull, long long> initialize_partial_hull(const PointSet& s) {
    if (s.empty()) throw input_error("quickhull on an empty set");
    std::vector<P2> pts = as_p2(s);

    PartialHull ph;
    if (pts.size() == 1) {
        ph.degenerate = make_hull_point(pts[0]);
        return {std::move(ph), 0};
    }

    // Topmost breaks ties to the left, bottommost to the right.
    P2 top = pts[0], bottom = pts[0];
    for (const P2& p : pts) {
        if (p.y > top.y || (p.y == top.y && p.x < top.x)) top = p;
        if (p.y < bottom.y || (p.y == bottom.y && p.x > bottom.x)) bottom = p;
    }

    bool collinear = true;
    for (const P2& p : pts) {
        if (orientation(bottom, top, p) != 0) {
            collinear = false;
            break;
        }
    }
    if (collinear) {
        long long absorbed = static_cast<long long>(pts.size()) - 2;
        ph.degenerate = make_hull_segment(bottom, top);
        return {std::move(ph), absorbed};
    }

    const P2 u{top.x - bottom.x, top.y - bottom.y};
    const P2 right_normal{u.y, -u.x};
    const P2 left_normal{-u.y, u.x};

    // Extremes in the two normal directions; ties go to the lexicographically
    // smallest point.
    auto extreme = [&pts](const P2& dir) {
        P2 best = pts[0];
        i128 best_dot = dot(dir, pts[0]);
        for (const P2& p : pts) {
            i128 v = dot(dir, p);
            if (v > best_dot || (v == best_dot && p < best)) {
                best = p;
                best_dot = v;
            }
        }
        return best;
    };
    const P2 right_extreme = extreme(right_normal);
    const P2 left_extreme = extreme(left_normal);

    // CCW cycle bottom -> right side -> top -> left side, with the supporting
    // line of each vertex: horizontal at the y-extremes, parallel to
    // top-bottom at the normal extremes.
    std::vector<std::pair<P2, P2>> cycle;  // vertex, outward support normal
    cycle.push_back({bottom, P2{0, -1}});
    if (orientation(bottom, top, right_extreme) < 0) cycle.push_back({right_extreme, right_normal});
    cycle.push_back({top, P2{0, 1}});
    if (orientation(bottom, top, left_extreme) > 0) cycle.push_back({left_extreme, left_normal});

    const std::size_t m = cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
        ActiveEdge e;
        e.a = cycle[i].first;
        e.b = cycle[(i + 1) % m].first;
        e.support_a = cycle[i].second;
        e.support_b = cycle[(i + 1) % m].second;
        ph.active.push_back(std::move(e));
    }

    long long absorbed = 0;
    for (const P2& p : pts) {
        bool is_vertex = false;
        for (const auto& [v, n] : cycle) {
            if (p == v) {
                is_vertex = true;
                break;
            }
        }
        if (is_vertex) continue;
        bool assigned = false;
        for (ActiveEdge& e : ph.active) {
            if (outside_distance(e.a, e.b, p) > 0) {
                e.bucket.push_back(p);
                assigned = true;
                break;
            }
        }
        if (!assigned) ++absorbed;  // inside or on the boundary of the partial hull
    }
    return {std::move(ph), absorbed};
}

StepRecord run_step(PartialHull& ph) {
    if (ph.active.empty()) throw internal_error("run_step on a partial hull without active edges");

    StepRecord rec;
    rec.remaining_before = ph.candidate_count();

    std::vector<ActiveEdge> next_active;
    for (ActiveEdge& edge : ph.active) {
        if (edge.bucket.empty()) {
            ph.confirmed.push_back({edge.a, edge.b});
            continue;
        }

        i128 dmax = 0;
        for (const P2& p : edge.bucket) dmax = std::max(dmax, outside_distance(edge.a, edge.b, p));
        if (dmax <= 0) {
            // Nothing strictly outside; leftovers sit on the supporting segment.
            rec.discarded += static_cast<long long>(edge.bucket.size());
            ph.confirmed.push_back({edge.a, edge.b});
            continue;
        }

        const P2 u{edge.b.x - edge.a.x, edge.b.y - edge.a.y};
        // First and last of the farthest set, ordered along the edge direction.
        P2 first, last;
        i128 first_t = 0, last_t = 0;
        bool have = false;
        long long farthest_count = 0;
        for (const P2& p : edge.bucket) {
            if (outside_distance(edge.a, edge.b, p) != dmax) continue;
            ++farthest_count;
            i128 t = dot(u, p);
            if (!have) {
                first = last = p;
                first_t = last_t = t;
                have = true;
                continue;
            }
            if (t < first_t) {
                first = p;
                first_t = t;
            }
            if (t > last_t) {
                last = p;
                last_t = t;
            }
        }

        PromotionEvent ev;
        ev.edge_a = edge.a;
        ev.edge_b = edge.b;
        ev.promoted.push_back(first);
        if (last != first) ev.promoted.push_back(last);
        rec.promoted += static_cast<long long>(ev.promoted.size());

        const P2 edge_normal{u.y, -u.x};
        ActiveEdge left;  // a -> first
        left.a = edge.a;
        left.b = first;
        left.support_a = edge.support_a;
        left.support_b = edge_normal;
        ActiveEdge right;  // last -> b
        right.a = last;
        right.b = edge.b;
        right.support_a = edge_normal;
        right.support_b = edge.support_b;

        for (const P2& p : edge.bucket) {
            i128 d = outside_distance(edge.a, edge.b, p);
            if (d == dmax) continue;  // promoted or dropped with the farthest run
            if (outside_distance(left.a, left.b, p) > 0) {
                left.bucket.push_back(p);
            } else if (outside_distance(right.a, right.b, p) > 0) {
                right.bucket.push_back(p);
            } else {
                ++rec.discarded;  // swallowed by the grown hull or on its edges
            }
        }
        rec.discarded += farthest_count - static_cast<long long>(ev.promoted.size());

        ev.twice_discarded_area = twice_discarded_region(edge.a, edge.b, first, last);
        RationalP2 e = line_intersection(first, u, edge.support_a, edge.a);
        RationalP2 f = line_intersection(last, u, edge.support_b, edge.b);
        ev.twice_preserved_a = twice_triangle_area(edge.a, first, e);
        ev.twice_preserved_b = twice_triangle_area(last, edge.b, f);
        rec.events.push_back(std::move(ev));

        next_active.push_back(std::move(left));
        if (last != first) ph.confirmed.push_back({first, last});  // the farthest run is a hull edge
        next_active.push_back(std::move(right));
    }
    ph.active = std::move(next_active);
    rec.remaining_after = ph.candidate_count();
    if (rec.remaining_after != rec.remaining_before - rec.discarded - rec.promoted) {
        throw internal_error("step accounting mismatch");
    }
    return rec;
}

QuickhullResult quickhull_traced(const PointSet& s, bool early_stop) {
    auto [ph, absorbed] = initialize_partial_hull(s);

    QuickhullResult res;
    res.trace.input_size = static_cast<long long>(s.size());
    res.trace.initial_discarded = absorbed;
    res.trace.candidates_after_init = ph.candidate_count();

    if (ph.degenerate) {
        res.hull = *ph.degenerate;
        return res;
    }

    while (!ph.active.empty()) {
        StepRecord rec = run_step(ph);
        res.trace.steps.push_back(rec);
        if (early_stop && 2 * rec.remaining_after > rec.remaining_before) {
            res.early_stopped = true;
            return res;
        }
    }

    // Chain the confirmed directed edges into the final CCW cycle.
    std::map<P2, P2> next;
    for (const auto& [a, b] : ph.confirmed) {
        if (!next.emplace(a, b).second) throw internal_error("vertex with two outgoing hull edges");
    }
    P2 start = ph.confirmed[0].first;
    for (const auto& [a, b] : ph.confirmed) {
        if (a < start) start = a;
    }
    std::vector<P2> cycle;
    P2 cur = start;
    do {
        cycle.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end()) throw internal_error("confirmed hull edges do not close a cycle");
        cur = it->second;
    } while (cur != start && cycle.size() <= next.size());
    if (cycle.size() != next.size()) throw internal_error("confirmed hull edges do not form one cycle");

    res.hull = make_hull(std::move(cycle));
    return res;
}

void validate_partial_hull(const PartialHull& ph) {
    for (std::size_t i = 0; i < ph.active.size(); ++i) {
        const ActiveEdge& e = ph.active[i];
        for (const P2& p : e.bucket) {
            if (outside_distance(e.a, e.b, p) <= 0) {
                throw internal_error("bucket point not strictly outside its edge");
            }
            if (dot(e.support_a, P2{p.x - e.a.x, p.y - e.a.y}) > 0 ||
                dot(e.support_b, P2{p.x - e.b.x, p.y - e.b.y}) > 0) {
                throw internal_error("bucket point outside its supporting triangle");
            }
            for (std::size_t j = 0; j < ph.active.size(); ++j) {
                if (j == i) continue;
                const ActiveEdge& o = ph.active[j];
                if (outside_distance(o.a, o.b, p) > 0) {
                    throw internal_error("bucket point strictly outside a foreign edge");
                }
            }
        }
    }
}

}  // namespace digiconv
