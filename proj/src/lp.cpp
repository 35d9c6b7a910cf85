#include "digiconv/lp.hpp"

#include <algorithm>
#include <optional>

#include "digiconv/rng.hpp"

namespace digiconv {
namespace {

constexpr std::uint64_t kShuffleSeed = 0x6C62272E07BB0142ULL;

// Implicit supply of constraint points. Row i reads as
//   g = (coords(i), -1), h = 0   over unknowns (a_1..a_d, b),
// encoding a·p - b <= 0. With `dilated` set, index i maps to source point
// i >> d and cube corner i & (2^d - 1), giving p = scale*s + corner; the
// corner points are generated here and never stored.
struct RowSupply {
    const std::vector<Point>* pts = nullptr;
    int d = 0;
    i64 scale = 1;
    bool dilated = false;

    long long count() const {
        long long n = static_cast<long long>(pts->size());
        return dilated ? (n << d) : n;
    }

    void coords(long long idx, i64* out) const {
        if (!dilated) {
            const Point& p = (*pts)[static_cast<std::size_t>(idx)];
            for (int j = 0; j < d; ++j) out[j] = scale * p[j];
            return;
        }
        const Point& p = (*pts)[static_cast<std::size_t>(idx >> d)];
        long long corner = idx & ((1LL << d) - 1);
        for (int j = 0; j < d; ++j) out[j] = scale * p[j] + (((corner >> j) & 1) ? 1 : -1);
    }

    i64 max_abs_coord() const {
        i64 m = 0;
        for (const Point& p : *pts) {
            for (i64 c : p) m = std::max(m, c < 0 ? -c : c);
        }
        m *= scale;
        if (dilated) m += 1;
        return m;
    }
};

struct Token {
    enum Kind { point_row, box_row };
    Kind kind;
    long long idx = 0;  // point row index
    int depth = 0;      // box rows: recursion depth where the row was born
    int k = 0;          // box rows: local variable index at birth
    int sign = 0;       // +1: y_k <= bound, -1: -y_k <= -bound
    i64 bound = 0;
};

// Equality substitution g·y = h eliminating local variable k:
//   y_k = rhs - sum_{j != k} ratio[j] * y_j,  ratio[j] = g[j]/g[k], rhs = h/g[k].
template <class R>
struct Sub {
    int k;
    std::vector<R> ratio;
    R rhs;
};

template <class R>
struct Solver {
    const RowSupply& supply;
    int full_dim;  // d + 1
    std::vector<Sub<R>> chain;
    SplitMix64 rng;
    LpStats* stats;
    std::vector<i64> scratch;
    // Shared row buffer: a materialized row is consumed before the next
    // materialize call at any depth, so one buffer serves the whole recursion.
    std::vector<R> row_g;
    R row_h{0};

    Solver(const RowSupply& s, int fd, LpStats* st)
        : supply(s), full_dim(fd), rng(kShuffleSeed ^ (std::uint64_t)s.count()), stats(st) {
        scratch.resize(static_cast<std::size_t>(s.d));
    }

    // Builds the token's row into row_g/row_h, in the coordinate space at
    // `target_depth`.
    void materialize(const Token& t, int target_depth) {
        std::vector<R>& g = row_g;
        R& h = row_h;
        int depth;
        if (t.kind == Token::point_row) {
            depth = 0;
            g.assign(static_cast<std::size_t>(full_dim), R(0));
            supply.coords(t.idx, scratch.data());
            for (int j = 0; j < supply.d; ++j) g[static_cast<std::size_t>(j)] = R(scratch[j]);
            g[static_cast<std::size_t>(supply.d)] = R(-1);
            h = R(0);
        } else {
            depth = t.depth;
            g.assign(static_cast<std::size_t>(full_dim - depth), R(0));
            g[static_cast<std::size_t>(t.k)] = R(t.sign);
            h = R(t.sign > 0 ? t.bound : -t.bound);
        }
        for (int level = depth; level < target_depth; ++level) {
            const Sub<R>& sub = chain[static_cast<std::size_t>(level)];
            R gk = g[static_cast<std::size_t>(sub.k)];
            g.erase(g.begin() + sub.k);
            if (!gk.is_zero()) {
                for (std::size_t j = 0; j < g.size(); ++j) {
                    std::size_t src = j < static_cast<std::size_t>(sub.k) ? j : j + 1;
                    g[j] = g[j] - gk * sub.ratio[src];
                }
                h = h - gk * sub.rhs;
            }
        }
        if (stats) stats->constraint_rows++;
    }

    // Maximizes obj·y over the tokens plus per-variable boxes. Returns the
    // optimal point, or nullopt when the system is infeasible.
    std::optional<std::vector<R>> solve(int depth, const std::vector<R>& obj, const std::vector<i64>& lo,
                                        const std::vector<i64>& hi, std::vector<Token> tokens) {
        const int dim = static_cast<int>(obj.size());

        if (dim == 1) {
            R best_lo(lo[0]), best_hi(hi[0]);
            for (const Token& t : tokens) {
                materialize(t, depth);
                int sg = row_g[0].sign();
                if (sg == 0) {
                    if (row_h.sign() < 0) return std::nullopt;
                    continue;
                }
                R bound = row_h / row_g[0];
                if (sg > 0) {
                    if (bound < best_hi) best_hi = bound;
                } else {
                    if (bound > best_lo) best_lo = bound;
                }
            }
            if (best_hi < best_lo) return std::nullopt;
            std::vector<R> y(1);
            y[0] = obj[0].sign() >= 0 ? best_hi : best_lo;
            return y;
        }

        std::vector<R> y(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) {
            y[static_cast<std::size_t>(j)] = obj[static_cast<std::size_t>(j)].sign() >= 0 ? R(hi[j]) : R(lo[j]);
        }
        rng.shuffle(tokens);

        for (std::size_t i = 0; i < tokens.size(); ++i) {
            materialize(tokens[i], depth);
            R dot(0);
            for (int j = 0; j < dim; ++j) {
                dot = dot + row_g[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
            }
            if (dot <= row_h) continue;

            // The optimum with this constraint added lies on its hyperplane;
            // eliminate one variable and recurse on the prefix.
            int k = -1;
            for (int j = 0; j < dim; ++j) {
                if (!row_g[static_cast<std::size_t>(j)].is_zero()) {
                    k = j;
                    break;
                }
            }
            if (k < 0) return std::nullopt;  // 0 > h: contradictory row

            Sub<R> sub;
            sub.k = k;
            sub.ratio.resize(static_cast<std::size_t>(dim));
            for (int j = 0; j < dim; ++j) {
                sub.ratio[static_cast<std::size_t>(j)] =
                    row_g[static_cast<std::size_t>(j)] / row_g[static_cast<std::size_t>(k)];
            }
            sub.rhs = row_h / row_g[static_cast<std::size_t>(k)];

            std::vector<R> sub_obj;
            std::vector<i64> sub_lo, sub_hi;
            sub_obj.reserve(static_cast<std::size_t>(dim - 1));
            for (int j = 0; j < dim; ++j) {
                if (j == k) continue;
                sub_obj.push_back(obj[static_cast<std::size_t>(j)] -
                                  obj[static_cast<std::size_t>(k)] * sub.ratio[static_cast<std::size_t>(j)]);
                sub_lo.push_back(lo[j]);
                sub_hi.push_back(hi[j]);
            }

            std::vector<Token> sub_tokens(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(i));
            Token box_hi{Token::box_row, 0, depth, k, +1, hi[k]};
            Token box_lo{Token::box_row, 0, depth, k, -1, lo[k]};
            sub_tokens.push_back(box_hi);
            sub_tokens.push_back(box_lo);

            chain.push_back(std::move(sub));
            auto sub_y = solve(depth + 1, sub_obj, sub_lo, sub_hi, std::move(sub_tokens));
            const Sub<R>& back = chain.back();
            if (!sub_y) {
                chain.pop_back();
                return std::nullopt;
            }
            R yk = back.rhs;
            for (int j = 0, jj = 0; j < dim; ++j) {
                if (j == k) continue;
                yk = yk - back.ratio[static_cast<std::size_t>(j)] * (*sub_y)[static_cast<std::size_t>(jj)];
                ++jj;
            }
            chain.pop_back();
            y.clear();
            y.insert(y.end(), sub_y->begin(), sub_y->begin() + k);
            y.push_back(yk);
            y.insert(y.end(), sub_y->begin() + k, sub_y->end());
        }
        return y;
    }
};

// Decides whether the objective point (given by integer coordinates x) lies
// strictly outside the hull of the supplied rows.
template <class R>
bool run_outside_test(const RowSupply& supply, const std::vector<i64>& x, LpStats* stats) {
    const int d = supply.d;
    const int dim = d + 1;

    i64 max_abs = supply.max_abs_coord();
    if (max_abs > (i64{1} << 61) / dim) {
        throw input_error("hull membership query exceeds the supported coordinate range");
    }
    i64 big = static_cast<i64>(dim) * max_abs + 1;

    std::vector<i64> lo(static_cast<std::size_t>(dim), -1), hi(static_cast<std::size_t>(dim), 1);
    lo[static_cast<std::size_t>(d)] = -big;
    hi[static_cast<std::size_t>(d)] = big;

    std::vector<R> obj;
    obj.reserve(static_cast<std::size_t>(dim));
    for (int j = 0; j < d; ++j) obj.push_back(R(x[static_cast<std::size_t>(j)]));
    obj.push_back(R(-1));

    std::vector<Token> tokens;
    tokens.reserve(static_cast<std::size_t>(supply.count()));
    for (long long i = 0; i < supply.count(); ++i) {
        Token t{Token::point_row, i, 0, 0, 0, 0};
        tokens.push_back(t);
    }

    Solver<R> solver(supply, dim, stats);
    auto y = solver.solve(0, obj, lo, hi, std::move(tokens));
    if (!y) throw internal_error("separation LP reported infeasible, but (a,b) = 0 is always feasible");

    // Optimal separation margin a·x - b; zero means no separating hyperplane.
    R value(0);
    for (int j = 0; j < dim; ++j) value = value + obj[static_cast<std::size_t>(j)] * (*y)[static_cast<std::size_t>(j)];
    return value.sign() > 0;
}

bool outside_hull(const RowSupply& supply, const std::vector<i64>& x, LpStats* stats, bool force_bignum) {
    if (stats) stats->lp_calls++;
    if (!force_bignum) {
        try {
            return run_outside_test<Frac>(supply, x, stats);
        } catch (const frac_overflow&) {
            if (stats) stats->bignum_fallbacks++;
        }
    }
    return run_outside_test<BigRational>(supply, x, stats);
}

void check_query(const Point& x, const PointSet& s) {
    if (s.empty()) throw input_error("hull membership against an empty set");
    if (static_cast<int>(x.size()) != s.dim) {
        throw input_error("query point dimension " + std::to_string(x.size()) + " does not match set dimension " +
                          std::to_string(s.dim));
    }
}

}  // namespace

bool in_convex_hull_lattice(const Point& x, const PointSet& s, LpStats* stats, bool force_bignum) {
    check_query(x, s);
    RowSupply supply{&s.points, s.dim, 1, false};
    return !outside_hull(supply, x, stats, force_bignum);
}

bool cube_intersects_hull(const Point& x, const PointSet& s, LpStats* stats, bool force_bignum) {
    check_query(x, s);
    RowSupply supply{&s.points, s.dim, 2, true};
    std::vector<i64> doubled(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) doubled[j] = 2 * x[j];
    return !outside_hull(supply, doubled, stats, force_bignum);
}

bool in_convex_hull(const RationalPoint& x, const PointSet& s, LpStats* stats) {
    using boost::multiprecision::cpp_int;
    if (s.empty()) throw input_error("hull membership against an empty set");
    if (static_cast<int>(x.coords.size()) != s.dim) {
        throw input_error("query point dimension does not match set dimension");
    }

    cpp_int scale(1);
    for (const BigRational& c : x.coords) {
        cpp_int den = boost::multiprecision::denominator(c);
        scale = boost::multiprecision::lcm(scale, den);
    }
    if (scale > (i64{1} << 30)) throw input_error("query point denominators too large");
    i64 scale64 = scale.convert_to<i64>();

    std::vector<i64> xs(x.coords.size());
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        cpp_int v = boost::multiprecision::numerator(x.coords[j]) *
                    (scale / boost::multiprecision::denominator(x.coords[j]));
        if (v > (i64{1} << 61) || v < -(i64{1} << 61)) throw input_error("scaled query coordinate too large");
        xs[j] = v.convert_to<i64>();
    }

    RowSupply supply{&s.points, s.dim, scale64, false};
    return !outside_hull(supply, xs, stats, false);
}

bool in_hull_of_rationals(const Point& x, const std::vector<std::vector<BigRational>>& generators,
                          LpStats* stats) {
    using boost::multiprecision::cpp_int;
    if (generators.empty()) throw input_error("hull membership against an empty generator set");
    const int d = static_cast<int>(x.size());
    for (const auto& gen : generators) {
        if (static_cast<int>(gen.size()) != d) throw input_error("generator dimension mismatch");
    }

    cpp_int scale(1);
    for (const auto& gen : generators) {
        for (const BigRational& c : gen) {
            scale = boost::multiprecision::lcm(scale, cpp_int(boost::multiprecision::denominator(c)));
        }
    }
    if (scale > (i64{1} << 30)) throw input_error("generator denominators too large");
    i64 scale64 = scale.convert_to<i64>();

    std::vector<Point> scaled;
    scaled.reserve(generators.size());
    for (const auto& gen : generators) {
        Point p(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            cpp_int v = boost::multiprecision::numerator(gen[static_cast<std::size_t>(j)]) *
                        (scale / boost::multiprecision::denominator(gen[static_cast<std::size_t>(j)]));
            if (v > (i64{1} << 61) || v < -(i64{1} << 61)) throw input_error("scaled generator coordinate too large");
            p[static_cast<std::size_t>(j)] = v.convert_to<i64>();
        }
        scaled.push_back(std::move(p));
    }

    std::vector<i64> xs(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        i128 v = i128(x[j]) * scale64;
        if (v > (i128{1} << 61) || v < -(i128{1} << 61)) throw input_error("scaled query coordinate too large");
        xs[j] = static_cast<i64>(v);
    }

    RowSupply supply{&scaled, d, 1, false};
    return !outside_hull(supply, xs, stats, false);
}

}  // namespace digiconv
