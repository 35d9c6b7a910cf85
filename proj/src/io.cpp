#include "digiconv/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace digiconv {
namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void fail_at(const std::string& name, long long line_no, const std::string& what) {
    throw input_error(name + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

PointSet read_point_set(std::istream& in, const std::string& name, std::optional<int> dim_override) {
    std::string line;
    long long line_no = 0;

    int dim = 0;
    long long count = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream hs(line);
        if (!(hs >> dim >> count)) fail_at(name, line_no, "expected header \"d n\"");
        std::string extra;
        if (hs >> extra) fail_at(name, line_no, "trailing content after header: \"" + extra + "\"");
        if (dim < 1) fail_at(name, line_no, "dimension must be >= 1");
        if (count < 0) fail_at(name, line_no, "negative point count");
        break;
    }
    if (count < 0) fail_at(name, line_no, "missing header line \"d n\"");
    if (dim_override) dim = *dim_override;

    std::vector<Point> rows;
    rows.reserve(static_cast<std::size_t>(count));
    while (static_cast<long long>(rows.size()) < count) {
        if (!std::getline(in, line)) {
            fail_at(name, line_no, "expected " + std::to_string(count) + " points, found only " +
                                       std::to_string(rows.size()));
        }
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        Point p;
        i64 value = 0;
        while (ls >> value) p.push_back(value);
        if (!ls.eof()) fail_at(name, line_no, "non-integer token in point row");
        if (static_cast<int>(p.size()) != dim) {
            fail_at(name, line_no, "expected " + std::to_string(dim) + " coordinates, got " +
                                       std::to_string(p.size()));
        }
        rows.push_back(std::move(p));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_blank_or_comment(line)) fail_at(name, line_no, "more rows than the header announced");
    }

    try {
        return validate_input(rows, dim);
    } catch (const input_error& e) {
        throw input_error(name + ": " + e.what());
    }
}

PointSet read_point_set_file(const std::string& path, std::optional<int> dim_override) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open for reading");
    return read_point_set(in, path, dim_override);
}

void write_point_set(std::ostream& out, const PointSet& s) {
    out << s.dim << ' ' << s.points.size() << '\n';
    for (const Point& p : s.points) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) out << ' ';
            out << p[j];
        }
        out << '\n';
    }
}

void write_point_set_file(const std::string& path, const PointSet& s) {
    std::ofstream out(path);
    if (!out) throw input_error(path + ": cannot open for writing");
    write_point_set(out, s);
    if (!out.flush()) throw input_error(path + ": write failed");
}

std::string report_to_text(const ConvexityReport& rep) {
    std::ostringstream out;
    out << "verdict: " << to_string(rep.verdict) << '\n';
    out << "reason: " << to_string(rep.reason) << '\n';
    out << "algorithm: " << rep.algorithm << '\n';
    out << "n: " << rep.n << '\n';
    if (rep.hull_edge_count) out << "h: " << *rep.hull_edge_count << '\n';
    if (rep.hull_lattice_count) out << "lattice_count: " << *rep.hull_lattice_count << '\n';
    out << "work: " << rep.work << '\n';
    out << "steps: " << rep.steps << '\n';
    if (rep.s_prime_size) out << "s_prime_size: " << *rep.s_prime_size << '\n';
    if (rep.lp_calls) out << "lp_calls: " << *rep.lp_calls << '\n';
    if (rep.peak_frontier) out << "peak_frontier: " << *rep.peak_frontier << '\n';
    if (rep.gap_point) out << "gap_point: " << to_string(*rep.gap_point) << '\n';
    out << "duplicates_dropped: " << (rep.duplicates_dropped ? "true" : "false") << '\n';
    return out.str();
}

std::string report_to_json(const ConvexityReport& rep) {
    nlohmann::json j;
    j["verdict"] = to_string(rep.verdict);
    j["reason"] = to_string(rep.reason);
    j["algorithm"] = rep.algorithm;
    j["n"] = rep.n;
    if (rep.hull_edge_count) j["h"] = *rep.hull_edge_count;
    if (rep.hull_lattice_count) j["lattice_count"] = *rep.hull_lattice_count;
    j["work"] = rep.work;
    j["steps"] = rep.steps;
    if (rep.s_prime_size) j["s_prime_size"] = *rep.s_prime_size;
    if (rep.lp_calls) j["lp_calls"] = *rep.lp_calls;
    if (rep.peak_frontier) j["peak_frontier"] = *rep.peak_frontier;
    if (rep.gap_point) j["gap_point"] = *rep.gap_point;
    j["duplicates_dropped"] = rep.duplicates_dropped;
    if (rep.hull) {
        nlohmann::json verts = nlohmann::json::array();
        for (const P2& v : rep.hull->vertices) verts.push_back({v.x, v.y});
        j["hull"] = verts;
    }
    return j.dump();
}

void write_trace(std::ostream& out, const QuickhullTrace& trace) {
    for (const StepRecord& s : trace.steps) {
        out << s.remaining_before << ' ' << s.discarded << ' ' << s.promoted << ' ' << s.remaining_after
            << '\n';
    }
}

}  // namespace digiconv
