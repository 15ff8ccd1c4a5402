#ifndef CAPLINK_INTERVAL_HPP
#define CAPLINK_INTERVAL_HPP

#include "caplink/rational.hpp"

#include <algorithm>

namespace caplink {

// Closed rational interval [lo, hi]. All interval arithmetic here is exact,
// so enclosures never suffer rounding slack.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    static Interval point(const Rational& v) { return {v, v}; }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }

    // +1 / -1 when the whole interval is strictly one-signed, else 0.
    int certain_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }

    bool disjoint_from(const Interval& o) const { return hi < o.lo || o.hi < lo; }
    bool contains_interval(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    Interval operator-() const { return {-hi, -lo}; }

    friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

    friend Interval operator*(const Interval& a, const Interval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
    }

    friend Interval operator*(const Rational& s, const Interval& a) {
        if (sgn(s) >= 0) return {s * a.lo, s * a.hi};
        return {s * a.hi, s * a.lo};
    }

    friend Interval operator+(const Interval& a, const Rational& s) { return {a.lo + s, a.hi + s}; }
};

} // namespace caplink

#endif
