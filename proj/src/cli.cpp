#include "digiconv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "digiconv/bench.hpp"
#include "digiconv/convexity2d.hpp"
#include "digiconv/convexity_nd.hpp"
#include "digiconv/generators.hpp"
#include "digiconv/io.hpp"
#include "digiconv/oracle.hpp"
#include "digiconv/pick.hpp"

namespace digiconv {
namespace {

// DIGICONV_VOLUME_CAP overrides the default bounding-box volume cap used by
// the fixed-dimension tester and the brute-force counters.
i64 volume_cap_from_env() {
    const char* env = std::getenv("DIGICONV_VOLUME_CAP");
    if (!env) return kDefaultVolumeCap;
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
        throw input_error("DIGICONV_VOLUME_CAP must be a positive integer, got \"" + std::string(env) + "\"");
    }
    return v;
}

std::optional<int> dim_override_opt(int value) {
    return value > 0 ? std::optional<int>(value) : std::nullopt;
}

int cmd_check(const std::string& path, int dim_override, const std::string& variant, bool json) {
    PointSet s = read_point_set_file(path, dim_override_opt(dim_override));

    std::string chosen = variant;
    if (chosen == "auto") chosen = s.dim == 2 ? "2d" : "nd-early";

    ConvexityReport rep;
    if (chosen == "2d") {
        rep = is_digital_convex_2d(s);
    } else {
        NdOptions opts;
        opts.volume_cap = volume_cap_from_env();
        rep = is_digital_convex_nd(s, chosen == "nd-count" ? NdVariant::count : NdVariant::early_exit, opts);
    }
    std::cout << (json ? report_to_json(rep) + "\n" : report_to_text(rep));
    return rep.is_convex() ? 0 : 1;
}

int cmd_hull(const std::string& path, int dim_override) {
    PointSet s = read_point_set_file(path, dim_override_opt(dim_override));
    QuickhullResult qh = quickhull_traced(s, /*early_stop=*/false);

    const Hull2D& hull = *qh.hull;
    switch (hull.shape) {
        case Hull2D::Shape::empty: std::cout << "degenerate: empty\n"; break;
        case Hull2D::Shape::point: std::cout << "degenerate: point\n"; break;
        case Hull2D::Shape::segment: std::cout << "degenerate: segment\n"; break;
        case Hull2D::Shape::full: break;
    }
    std::cout << "h: " << hull.edge_count() << "\n";
    for (const P2& v : hull.vertices) std::cout << v.x << ' ' << v.y << '\n';
    std::cout << "steps: " << qh.trace.steps.size() << '\n';
    for (std::size_t i = 0; i < qh.trace.steps.size(); ++i) {
        const StepRecord& st = qh.trace.steps[i];
        double ratio = st.remaining_before > 0
                           ? static_cast<double>(st.discarded) / static_cast<double>(st.remaining_before)
                           : 1.0;
        std::cout << "step " << i << ": before=" << st.remaining_before << " discarded=" << st.discarded
                  << " promoted=" << st.promoted << " after=" << st.remaining_after
                  << " discard_ratio=" << ratio << '\n';
    }
    return 0;
}

int cmd_count(const std::string& path, int dim_override) {
    PointSet s = read_point_set_file(path, dim_override_opt(dim_override));
    if (s.empty()) {
        std::cout << 0 << '\n';
        return 0;
    }
    if (s.dim == 2) {
        QuickhullResult qh = quickhull_traced(s, /*early_stop=*/false);
        std::cout << lattice_count(*qh.hull) << '\n';
    } else {
        std::cout << brute_lattice_points(s, volume_cap_from_env()).size() << '\n';
    }
    return 0;
}

int cmd_gen(const std::string& kind, int d, i64 r2, int num_generators, i64 half_width, i64 k,
            std::uint64_t seed, const std::string& base_path, const std::string& out_path) {
    PointSet s;
    if (kind == "ball") {
        s = gen_ball(d, r2, Point(static_cast<std::size_t>(d), 0));
    } else if (kind == "polytope") {
        s = gen_random_polytope_points(d, num_generators, half_width, seed);
    } else if (kind == "punctured") {
        if (base_path.empty()) throw input_error("punctured generation needs --base FILE");
        s = gen_punctured(read_point_set_file(base_path), seed);
    } else if (kind == "skewed-pair") {
        s = gen_skewed_pair(k);
    } else {
        throw input_error("unknown generator \"" + kind + "\"; known: ball, polytope, punctured, skewed-pair");
    }
    if (out_path.empty() || out_path == "-") {
        write_point_set(std::cout, s);
    } else {
        write_point_set_file(out_path, s);
    }
    return 0;
}

int cmd_bench(const std::string& suite, const std::vector<long long>& sizes,
              const std::vector<std::uint64_t>& seeds, const std::vector<i64>& ks, int reps,
              const std::string& out_path) {
    BenchConfig cfg;
    cfg.sizes = sizes;
    if (!seeds.empty()) cfg.seeds = seeds;
    if (!ks.empty()) cfg.ks = ks;
    cfg.reps = reps;
    cfg.volume_cap = volume_cap_from_env();
    std::vector<BenchRow> rows = run_bench_suite(suite, cfg);
    if (out_path.empty() || out_path == "-") {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw input_error(out_path + ": cannot open for writing");
        write_csv(out, rows);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"digiconv: digital convexity tester for lattice point sets"};
    app.require_subcommand(1);

    std::string path, variant = "auto", out_path, base_path, kind, suite;
    int dim_override = 0;
    bool json = false;
    int d = 2, num_generators = 8, reps = 3;
    i64 r2 = 25, half_width = 10, k = 1;
    std::uint64_t seed = 1;
    std::vector<long long> sizes;
    std::vector<std::uint64_t> seeds;
    std::vector<i64> ks;

    CLI::App* check = app.add_subcommand("check", "test digital convexity of a point-set file");
    check->add_option("path", path)->required();
    check->add_option("--dim-override", dim_override, "reinterpret rows with this dimension");
    check->add_option("--variant", variant, "auto|2d|nd-count|nd-early")
        ->check(CLI::IsMember({"auto", "2d", "nd-count", "nd-early"}));
    check->add_flag("--json", json, "structured output");

    CLI::App* hull = app.add_subcommand("hull", "print the CCW convex hull and quickhull trace summary");
    hull->add_option("path", path)->required();
    hull->add_option("--dim-override", dim_override);

    CLI::App* count = app.add_subcommand("count", "count lattice points of the convex hull");
    count->add_option("path", path)->required();
    count->add_option("--dim-override", dim_override);

    CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("kind", kind, "ball|polytope|punctured|skewed-pair")->required();
    gen->add_option("--d", d, "dimension");
    gen->add_option("--r2", r2, "squared radius (ball)");
    gen->add_option("--num-generators", num_generators, "rational generator count (polytope)");
    gen->add_option("--half-width", half_width, "box half width (polytope)");
    gen->add_option("--k", k, "skew parameter (skewed-pair)");
    gen->add_option("--seed", seed);
    gen->add_option("--base", base_path, "base instance (punctured)");
    gen->add_option("--out", out_path, "output file, - for stdout");

    CLI::App* bench = app.add_subcommand("bench", "run a benchmark suite, emit CSV");
    bench->add_option("suite", suite, "convex-2d-scaling|negative-2d|nd-scaling|skewed-pair")->required();
    bench->add_option("--sizes", sizes, "target instance sizes");
    bench->add_option("--seeds", seeds);
    bench->add_option("--ks", ks, "skew parameters");
    bench->add_option("--reps", reps, "timing repetitions");
    bench->add_option("--out", out_path, "output CSV, - for stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(path, dim_override, variant, json);
        if (hull->parsed()) return cmd_hull(path, dim_override);
        if (count->parsed()) return cmd_count(path, dim_override);
        if (gen->parsed()) return cmd_gen(kind, d, r2, num_generators, half_width, k, seed, base_path, out_path);
        if (bench->parsed()) return cmd_bench(suite, sizes, seeds, ks, reps, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace digiconv
