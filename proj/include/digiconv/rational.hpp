// Exact rational arithmetic: a fast fixed-width path over __int128 that
// throws on overflow, and an arbitrary-precision fallback.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "digiconv/core.hpp"

namespace digiconv {

using BigRational = boost::multiprecision::cpp_rational;

struct frac_overflow : std::overflow_error {
    frac_overflow() : std::overflow_error("128-bit rational overflow") {}
};

namespace detail {

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw frac_overflow();
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw frac_overflow();
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw frac_overflow();
    return r;
}

inline i128 gcd_i128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

// Reduced fraction with positive denominator over __int128. Every operation
// is exact; operations whose intermediates exceed 128 bits throw
// frac_overflow so callers can retry with BigRational.
class Frac {
public:
    Frac() : num_(0), den_(1) {}
    Frac(i64 v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Frac(i128 num, i128 den) : num_(num), den_(den) { normalize(); }

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        using namespace detail;
        i128 g = gcd_i128(a.den_, b.den_);
        i128 bs = b.den_ / g;
        i128 n = checked_add(checked_mul(a.num_, bs), checked_mul(b.num_, a.den_ / g));
        return Frac(n, checked_mul(a.den_, bs));
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        using namespace detail;
        i128 g = gcd_i128(a.den_, b.den_);
        i128 bs = b.den_ / g;
        i128 n = checked_sub(checked_mul(a.num_, bs), checked_mul(b.num_, a.den_ / g));
        return Frac(n, checked_mul(a.den_, bs));
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        using namespace detail;
        i128 g1 = gcd_i128(a.num_, b.den_);
        i128 g2 = gcd_i128(b.num_, a.den_);
        return Frac(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1),
                    already_reduced{});
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num_ == 0) throw internal_error("rational division by zero");
        using namespace detail;
        i128 g1 = gcd_i128(a.num_, b.num_);
        i128 g2 = gcd_i128(b.den_, a.den_);
        i128 n = checked_mul(a.num_ / g1, b.den_ / g2);
        i128 d = checked_mul(a.den_ / g2, b.num_ / g1);
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return Frac(n, d, already_reduced{});
    }
    Frac operator-() const { return Frac(-num_, den_, already_reduced{}); }

    friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) {
        using namespace detail;
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
    friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

    BigRational to_big() const {
        return BigRational(boost::multiprecision::cpp_int(num_), boost::multiprecision::cpp_int(den_));
    }

private:
    struct already_reduced {};
    Frac(i128 num, i128 den, already_reduced) : num_(num), den_(den) {}

    void normalize() {
        if (den_ == 0) throw internal_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        i128 g = detail::gcd_i128(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    i128 num_;
    i128 den_;
};

inline std::string to_string(const Frac& f) {
    std::string s = to_string(f.num());
    if (f.den() != 1) s += "/" + to_string(f.den());
    return s;
}

inline std::string to_string(const BigRational& r) {
    return r.str();
}

}  // namespace digiconv
