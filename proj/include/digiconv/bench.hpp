// Benchmark harness: seeded instance sweeps with work counters and wall
// times, emitted as CSV rows.
#pragma once

#include <iosfwd>

#include "digiconv/core.hpp"

namespace digiconv {

struct BenchRow {
    std::string suite;
    long long n = 0;
    long long h = 0;   // hull edge count (0 when no hull was produced)
    i64 r = 0;         // L-infinity diameter
    long long steps = 0;
    long long total_candidate_scans = 0;
    long long lp_calls = 0;
    long long s_prime_size = 0;
    long long wall_ns = 0;
    bool capped = false;
};

struct BenchConfig {
    std::vector<long long> sizes;    // target instance sizes
    std::vector<std::uint64_t> seeds = {1};
    std::vector<i64> ks = {1, 2, 4, 8, 16};  // skewed-pair parameters
    int reps = 3;                    // timing repetitions, fastest kept
    i64 volume_cap = 100'000'000;
};

// Suites: convex-2d-scaling, negative-2d, nd-scaling, skewed-pair.
std::vector<BenchRow> run_bench_suite(const std::string& suite, const BenchConfig& cfg);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace digiconv
