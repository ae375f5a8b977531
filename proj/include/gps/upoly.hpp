#pragma once

#include "gps/errors.hpp"
#include "gps/interval.hpp"
#include "gps/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace gps {

inline bool coeff_is_zero(const Rational& q) { return q == 0; }
inline int coeff_sign(const Rational& q) { return q.sign(); }
inline Rational coeff_abs_upper(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Dense univariate polynomial over an exact field T.
// T needs: default ctor (= 0), ring ops, division, coeff_is_zero, coeff_sign,
// coeff_abs_upper (certified |.| upper bound), construction from Rational.
template <typename T>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<T> cs) : c_(std::move(cs)) { normalize(); }
    static UPoly constant(T v) { return UPoly(std::vector<T>{std::move(v)}); }
    // x^k
    static UPoly monomial(T v, size_t k) {
        std::vector<T> cs(k + 1);
        cs[k] = std::move(v);
        return UPoly(std::move(cs));
    }

    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const T& lead() const { return c_.back(); }
    T coeff(size_t k) const { return k < c_.size() ? c_[k] : T(); }

    template <typename U>
    U eval(const U& x) const {
        U acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }
    T eval_at(const Rational& x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * T(x) + *it;
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<T> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(Rational((long)k));
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        UPoly r = *this;
        T inv = T(Rational(1)) / lead();
        for (auto& x : r.c_) x = x * inv;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(r));
    }
    UPoly scaled(const T& s) const {
        UPoly r = *this;
        for (auto& x : r.c_) x = x * s;
        r.normalize();
        return r;
    }
    UPoly operator-() const { return scaled(T(Rational(-1))); }

    // Euclidean division; T is a field.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw domain_error("UPoly: division by zero polynomial");
        UPoly rem = a;
        std::vector<T> q;
        if (rem.degree() >= b.degree()) q.resize(rem.degree() - b.degree() + 1);
        T linv = T(Rational(1)) / b.lead();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            size_t shift = rem.degree() - b.degree();
            T f = rem.lead() * linv;
            q[shift] = f;
            for (size_t k = 0; k < b.c_.size(); ++k)
                rem.c_[shift + k] = rem.c_[shift + k] - f * b.c_[k];
            rem.normalize();
        }
        return {UPoly(std::move(q)), rem};
    }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Returns (g, u, v) with u*a + v*b = g = gcd(a,b) monic.
    static std::tuple<UPoly, UPoly, UPoly> extended_gcd(const UPoly& a, const UPoly& b) {
        UPoly r0 = a, r1 = b;
        UPoly s0 = constant(T(Rational(1))), s1;
        UPoly t0, t1 = constant(T(Rational(1)));
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = std::move(r1); r1 = std::move(r);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        T inv = T(Rational(1)) / r0.lead();
        return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
    }

    UPoly squarefree_part() const {
        if (degree() <= 1) return monic();
        UPoly g = gcd(*this, derivative());
        if (g.degree() == 0) return monic();
        return divmod(*this, g).first.monic();
    }

    // Cauchy bound: every real root lies in [-B, B]. Call on a monic poly
    // (coeff_abs_upper gives only an upper bound, so |lead| must be 1).
    Rational root_bound() const {
        if (degree() <= 0) return Rational(1);
        Rational m(0);
        for (int k = 0; k < degree(); ++k) m = std::max(m, coeff_abs_upper(c_[k]));
        return Rational(1) + m;
    }

    std::vector<UPoly> sturm_chain() const {
        std::vector<UPoly> chain;
        chain.push_back(*this);
        UPoly d = derivative();
        if (!d.is_zero()) chain.push_back(d);
        while (chain.size() >= 2 && !chain.back().is_zero()) {
            auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
            (void)q;
            if (r.is_zero()) break;
            chain.push_back(-r);
        }
        return chain;
    }

    void normalize() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }

private:
    std::vector<T> c_;
};

using QPoly = UPoly<Rational>;

// Number of sign changes of the chain evaluated at x (zeros skipped).
template <typename T>
int sturm_sign_changes(const std::vector<UPoly<T>>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = coeff_sign(p.eval_at(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Distinct real roots of a squarefree p in (a, b]; requires p(a), p(b) != 0.
template <typename T>
int sturm_count(const std::vector<UPoly<T>>& chain, const Rational& a, const Rational& b) {
    return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

// One isolated real root of a squarefree polynomial.
template <typename T>
struct IsolatedRoot {
    QInterval interval;                 // open-ish isolating interval, p != 0 at endpoints
    std::optional<Rational> exact;      // set when the root is known exactly rational
    int multiplicity = 1;               // w.r.t. the original (pre-squarefree) polynomial
};

// Squarefree decomposition (Yun): returns {(f_i, i)} with p ~ prod f_i^i,
// every f_i squarefree and pairwise coprime.
template <typename T>
std::vector<std::pair<UPoly<T>, int>> squarefree_decomposition(const UPoly<T>& p) {
    std::vector<std::pair<UPoly<T>, int>> out;
    if (p.degree() < 1) return out;
    UPoly<T> a = p.monic(), d = a.derivative();
    UPoly<T> g = UPoly<T>::gcd(a, d);
    UPoly<T> b = UPoly<T>::divmod(a, g).first;
    UPoly<T> c = UPoly<T>::divmod(d, g).first;
    for (int i = 1; b.degree() >= 1; ++i) {
        UPoly<T> w = c - b.derivative();
        UPoly<T> f = UPoly<T>::gcd(b, w);
        if (f.degree() >= 1) out.emplace_back(f.monic(), i);
        b = UPoly<T>::divmod(b, f).first;
        c = UPoly<T>::divmod(w, f).first;
    }
    return out;
}

// A split point in (a,b) where p does not vanish; tries the midpoint first.
template <typename T>
Rational nonroot_split_point(const UPoly<T>& p, const Rational& a, const Rational& b) {
    Rational mid = (a + b) / 2;
    if (coeff_sign(p.eval_at(mid)) != 0) return mid;
    for (long k = 1;; ++k) {
        Rational q(k, 2 * k + 1);
        Rational cand = a + (b - a) * q;
        if (coeff_sign(p.eval_at(cand)) != 0) return cand;
        if (k > p.degree() + 2) throw internal_error("nonroot_split_point exhausted");
    }
}

// Isolates all distinct real roots of p (any polynomial, deg >= 1) with
// multiplicities; rational roots are recovered exactly via continued-fraction
// search with `cf_rounds` refinement rounds.
template <typename T>
std::vector<IsolatedRoot<T>> isolate_real_roots(const UPoly<T>& p, int cf_rounds = 48) {
    std::vector<IsolatedRoot<T>> roots;
    if (p.degree() < 1) return roots;
    UPoly<T> sf = p.squarefree_part();
    auto chain = sf.sturm_chain();
    Rational bound = sf.root_bound() + 1;
    std::vector<std::pair<Rational, Rational>> queue{{-bound, bound}}, isolated;
    while (!queue.empty()) {
        auto [a, b] = queue.back();
        queue.pop_back();
        int cnt = sturm_count(chain, a, b);
        if (cnt == 0) continue;
        if (cnt == 1) {
            isolated.emplace_back(a, b);
            continue;
        }
        Rational s = nonroot_split_point(sf, a, b);
        queue.emplace_back(a, s);
        queue.emplace_back(s, b);
    }
    std::sort(isolated.begin(), isolated.end());

    auto sqf = squarefree_decomposition(p);
    auto multiplicity_of = [&](const IsolatedRoot<T>& r) {
        for (const auto& [f, m] : sqf) {
            if (r.exact) {
                if (coeff_is_zero(f.eval_at(*r.exact))) return m;
            } else {
                if (coeff_sign(f.eval_at(r.interval.lo)) *
                        coeff_sign(f.eval_at(r.interval.hi)) < 0)
                    return m;
            }
        }
        return 1;
    };

    for (auto& [a, b] : isolated) {
        IsolatedRoot<T> r;
        Rational lo = a, hi = b;
        int slo = coeff_sign(sf.eval_at(lo));
        for (int round = 0; round < cf_rounds; ++round) {
            Rational s = simplest_in_interval(lo, hi);
            if (s == lo || s == hi) s = (lo + hi) / 2;
            int ss = coeff_sign(sf.eval_at(s));
            if (ss == 0) {
                r.exact = s;
                lo = hi = s;
                break;
            }
            if (ss == slo) lo = s; else hi = s;
        }
        r.interval = QInterval(lo, hi);
        r.multiplicity = multiplicity_of(r);
        roots.push_back(std::move(r));
    }
    return roots;
}

} // namespace gps
