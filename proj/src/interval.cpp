#include "gps/interval.hpp"

#include "gps/errors.hpp"

#include <algorithm>

namespace gps {

QInterval::QInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw domain_error("QInterval: lo > hi");
}

std::optional<int> QInterval::certified_sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return std::nullopt;
}

QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
}

QInterval operator-(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo - b.hi, a.hi - b.lo);
}

QInterval operator*(const QInterval& a, const QInterval& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return QInterval(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}

QInterval QInterval::scaled(const Rational& q) const {
    if (q >= 0) return QInterval(lo * q, hi * q);
    return QInterval(hi * q, lo * q);
}

std::string QInterval::str() const {
    return "[" + to_string(lo) + "," + to_string(hi) + "]";
}

} // namespace gps
