#include "gps/rational.hpp"

#include "gps/errors.hpp"

#include <cmath>

namespace gps {

Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (q == 0) throw domain_error("rational_pow: zero to negative power");
        return Rational(1) / rational_pow(q, -e);
    }
    Rational base = q, acc(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Integer rational_floor(const Rational& q) {
    Integer n = num(q), d = den(q);
    Integer quo = n / d; // truncates toward zero
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

std::optional<Integer> integer_nth_root(const Integer& v, unsigned n) {
    if (v < 0 || n == 0) return std::nullopt;
    if (v == 0 || v == 1 || n == 1) return v;
    // Newton iteration on integers, then verify exactly.
    Integer x = Integer(1) << (unsigned)(msb(v) / n + 1);
    Integer prev = -1;
    while (x != prev) {
        prev = x;
        Integer xn1 = pow(x, n - 1);
        x = ((n - 1) * x + v / xn1) / n;
        if (x > prev) break; // converged from above
    }
    for (Integer c = prev - 1; c <= prev + 1; ++c) {
        if (c >= 0 && pow(c, n) == v) return c;
    }
    return std::nullopt;
}

std::optional<Rational> rational_nth_root(const Rational& q, unsigned n) {
    if (q < 0) return std::nullopt;
    auto rn = integer_nth_root(num(q), n);
    if (!rn) return std::nullopt;
    auto rd = integer_nth_root(den(q), n);
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw domain_error("simplest_in_interval: empty interval");
    if (lo == hi) return lo;
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_in_interval(-hi, -lo);
    // 0 < lo < hi: continued-fraction descent.
    Integer fl = rational_floor(lo);
    if (Rational(fl + 1) <= hi) {
        // An integer lies inside: lo <= fl+1 <= hi unless lo is that integer.
        if (lo == Rational(fl)) return lo;
        return Rational(fl + 1) <= hi ? Rational(fl + 1) : lo;
    }
    if (lo == Rational(fl)) return lo;
    Rational frac_lo = lo - Rational(fl), frac_hi = hi - Rational(fl);
    // Recurse on reciprocals (interval flips).
    Rational r = simplest_in_interval(Rational(1) / frac_hi, Rational(1) / frac_lo);
    return Rational(fl) + Rational(1) / r;
}

std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    // cpp_int parses a leading 0 as an octal prefix; strip it.
    auto strip = [](std::string s) {
        size_t k = 0;
        while (k + 1 < s.size() && s[k] == '0') ++k;
        return s.substr(k);
    };
    std::string body = text;
    bool neg = false;
    if (body[0] == '-') { neg = true; body = body.substr(1); }
    else if (body[0] == '+') { body = body.substr(1); }
    Rational v;
    auto slash = body.find('/');
    auto dot   = body.find('.');
    if (slash != std::string::npos) {
        std::string n = body.substr(0, slash), d = body.substr(slash + 1);
        if (!digits(n) || !digits(d) || d == "0") return std::nullopt;
        v = Rational(Integer(strip(n)), Integer(strip(d)));
    } else if (dot != std::string::npos) {
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!digits(ip) || (!fp.empty() && !digits(fp))) return std::nullopt;
        Integer scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        v = Rational(Integer(strip(ip)) * scale + (fp.empty() ? Integer(0) : Integer(strip(fp))),
                     scale);
    } else {
        if (!digits(body)) return std::nullopt;
        v = Rational(Integer(strip(body)));
    }
    return neg ? -v : v;
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

} // namespace gps
