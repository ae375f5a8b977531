#pragma once

#include "gps/rational.hpp"

#include <string>

namespace gps {

// Closed interval with exact rational endpoints.
struct QInterval {
    Rational lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rational v) : lo(v), hi(v) {}
    QInterval(Rational lo_, Rational hi_);

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }

    // Certified sign: -1, 0 (exact zero point interval), +1, or nullopt when
    // the interval straddles zero with positive width.
    std::optional<int> certified_sign() const;

    friend QInterval operator+(const QInterval& a, const QInterval& b);
    friend QInterval operator-(const QInterval& a, const QInterval& b);
    friend QInterval operator*(const QInterval& a, const QInterval& b);
    QInterval scaled(const Rational& q) const;

    std::string str() const;
};

} // namespace gps
