#include "digiconv/bench.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>

#include "digiconv/convexity2d.hpp"
#include "digiconv/convexity_nd.hpp"
#include "digiconv/generators.hpp"

namespace digiconv {
namespace {

long long time_ns(int reps, const std::function<void()>& body) {
    long long best = -1;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        long long ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        if (best < 0 || ns < best) best = ns;
    }
    return best;
}

// Disk radius whose lattice-point count approximates the target size.
i64 disk_radius_for(long long target) {
    return std::max<i64>(1, static_cast<i64>(std::llround(std::sqrt(static_cast<double>(target) / 3.14159265))));
}

BenchRow row_2d(const std::string& suite, const PointSet& s, int reps) {
    BenchRow row;
    row.suite = suite;
    row.n = static_cast<long long>(s.size());
    row.r = diameter_linf(s);
    ConvexityReport rep;
    row.wall_ns = time_ns(reps, [&] { rep = is_digital_convex_2d(s); });
    row.h = rep.hull_edge_count.value_or(0);
    row.steps = rep.steps;
    row.total_candidate_scans = rep.work;
    return row;
}

BenchRow row_nd(const std::string& suite, const PointSet& s, int reps, i64 volume_cap) {
    BenchRow row;
    row.suite = suite;
    row.n = static_cast<long long>(s.size());
    row.r = diameter_linf(s);
    NdOptions opts;
    opts.volume_cap = volume_cap;
    try {
        ConvexityReport rep;
        row.wall_ns = time_ns(reps, [&] { rep = is_digital_convex_nd(s, NdVariant::count, opts); });
        row.lp_calls = rep.lp_calls.value_or(0);
        row.s_prime_size = rep.s_prime_size.value_or(0);
    } catch (const resource_error&) {
        row.capped = true;
    }
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench_suite(const std::string& suite, const BenchConfig& cfg) {
    std::vector<BenchRow> rows;

    if (suite == "convex-2d-scaling") {
        for (long long target : cfg.sizes) {
            PointSet s = gen_ball(2, disk_radius_for(target) * disk_radius_for(target), {0, 0});
            rows.push_back(row_2d(suite, s, cfg.reps));
        }
        return rows;
    }
    if (suite == "negative-2d") {
        for (long long target : cfg.sizes) {
            for (std::uint64_t seed : cfg.seeds) {
                i64 r = disk_radius_for(target);
                PointSet s = gen_punctured(gen_ball(2, r * r, {0, 0}), seed);
                rows.push_back(row_2d(suite, s, cfg.reps));
            }
        }
        return rows;
    }
    if (suite == "nd-scaling") {
        for (long long target : cfg.sizes) {
            // Radius for a 3D ball holding roughly `target` lattice points.
            i64 r = std::max<i64>(1, static_cast<i64>(std::llround(
                                         std::cbrt(static_cast<double>(target) * 3.0 / (4.0 * 3.14159265)))));
            PointSet s = gen_ball(3, r * r, {0, 0, 0});
            rows.push_back(row_nd(suite, s, cfg.reps, cfg.volume_cap));
        }
        return rows;
    }
    if (suite == "skewed-pair") {
        for (i64 k : cfg.ks) {
            PointSet s = gen_skewed_pair(k);
            BenchRow row = row_nd(suite, s, cfg.reps, cfg.volume_cap);
            rows.push_back(row);
        }
        return rows;
    }
    throw input_error("unknown bench suite \"" + suite +
                      "\"; known: convex-2d-scaling, negative-2d, nd-scaling, skewed-pair");
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "suite,n,h,r,steps,total_candidate_scans,lp_calls,s_prime_size,wall_ns,capped\n";
    for (const BenchRow& r : rows) {
        out << r.suite << ',' << r.n << ',' << r.h << ',' << r.r << ',' << r.steps << ','
            << r.total_candidate_scans << ',' << r.lp_calls << ',' << r.s_prime_size << ',' << r.wall_ns
            << ',' << (r.capped ? 1 : 0) << '\n';
    }
}

}  // namespace digiconv
