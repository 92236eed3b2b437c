#pragma once

#include "rational.hpp"

#include <algorithm>

namespace stubborn {

// Closed interval with exact rational endpoints.
struct QInterval {
    Q lo, hi;

    QInterval() : lo(0), hi(0) {}
    explicit QInterval(const Q& v) : lo(v), hi(v) {}
    QInterval(const Q& a, const Q& b) : lo(a), hi(b) {}

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool is_point() const { return lo == hi; }
    Q width() const { return hi - lo; }
    Q mid() const { return (lo + hi) / 2; }

    // sign is defined only when the interval excludes zero
    bool sign_known() const { return sgn(lo) > 0 || sgn(hi) < 0; }
    int sign() const { return sgn(lo) > 0 ? 1 : -1; }

    QInterval operator-() const { return {-hi, -lo}; }
    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const {
        Q a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }
    QInterval& operator+=(const QInterval& o) { *this = *this + o; return *this; }
    QInterval& operator*=(const QInterval& o) { *this = *this * o; return *this; }

    QInterval sqr() const {
        if (sgn(lo) >= 0) return {lo * lo, hi * hi};
        if (sgn(hi) <= 0) return {hi * hi, lo * lo};
        Q m = Q(-lo) > hi ? Q(-lo) : hi;
        return {Q(0), m * m};
    }

    QInterval pow(unsigned e) const {
        if (e == 0) return QInterval(Q(1));
        QInterval acc = (e & 1) ? *this : this->sqr();
        QInterval base = this->sqr();
        for (e >>= 1; e; e >>= 1) {
            if (e & 1) acc *= base;
            base = base.sqr();
        }
        return acc;
    }

    bool intersects(const QInterval& o) const { return !(hi < o.lo || o.hi < lo); }
};

// Enclosure of sqrt(v) for exact rational v >= 0, width <= 2^-prec_bits.
QInterval sqrt_point_enclosure(const Q& v, unsigned prec_bits);

// Enclosure of sqrt over an interval with nonnegative upper endpoint; the
// lower endpoint is clamped at zero (used while refining radicand boxes).
QInterval sqrt_enclosure(const QInterval& v, unsigned prec_bits);

} // namespace stubborn
