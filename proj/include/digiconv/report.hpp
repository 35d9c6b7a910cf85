// Result record shared by the planar and fixed-dimension convexity testers.
#pragma once

#include <optional>

#include "digiconv/hull2d.hpp"

namespace digiconv {

enum class Verdict { convex, not_convex };
enum class Reason { confirmed, early_stop, count_mismatch };

struct ConvexityReport {
    Verdict verdict = Verdict::not_convex;
    Reason reason = Reason::count_mismatch;
    std::string algorithm;  // "2d", "nd-count", "nd-early"

    long long n = 0;
    bool duplicates_dropped = false;

    // Planar path.
    std::optional<Hull2D> hull;                 // absent after an early stop
    std::optional<long long> hull_edge_count;   // h
    std::optional<long long> hull_lattice_count;
    long long work = 0;                         // candidate scans across quickhull steps
    long long steps = 0;

    // Fixed-dimension path.
    std::optional<long long> s_prime_size;
    std::optional<long long> lp_calls;
    std::optional<long long> peak_frontier;
    std::optional<Point> gap_point;  // witness found by the early-exit variant

    bool is_convex() const { return verdict == Verdict::convex; }
};

const char* to_string(Verdict v);
const char* to_string(Reason r);

}  // namespace digiconv
