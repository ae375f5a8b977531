#include "gps/gseries.hpp"

#include "gps/errors.hpp"

#include <cmath>
#include <sstream>

namespace gps {

std::optional<int> VarSignature::slot_of(const std::string& nm) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == nm) return static_cast<int>(i);
    return std::nullopt;
}

std::vector<Exponent> VarSignature::expvec_zero() const {
    return std::vector<Exponent>(static_cast<size_t>(total()), exp_zero());
}

bool VarSignature::operator==(const VarSignature& o) const {
    return m == o.m && n == o.n && names == o.names && basis.get() == o.basis.get();
}

VarSignature VarSignature::with_removed(int slot) const {
    VarSignature s = *this;
    s.names.erase(s.names.begin() + slot);
    if (slot < m) --s.m; else --s.n;
    return s;
}

VarSignature VarSignature::with_inserted(int slot, bool generalized, std::string nm) const {
    VarSignature s = *this;
    if (generalized) {
        if (slot > m) throw internal_error("with_inserted: generalized slot beyond block");
        ++s.m;
    } else {
        if (slot < m) throw internal_error("with_inserted: standard slot inside generalized block");
        ++s.n;
    }
    s.names.insert(s.names.begin() + slot, std::move(nm));
    return s;
}

std::string VarSignature::fresh_name(const std::string& stem) const {
    if (!slot_of(stem)) return stem;
    for (int k = 1;; ++k) {
        std::string cand = stem + std::to_string(k);
        if (!slot_of(cand)) return cand;
    }
}

bool expvec_leq(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].cmp(b[i]) == Cmp::GT) return false;
    return true;
}

ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec expvec_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool ExpVecLess::operator()(const ExpVec& a, const ExpVec& b) const {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        Cmp c = a[i].cmp(b[i]);
        if (c == Cmp::LT) return true;
        if (c == Cmp::GT) return false;
    }
    return a.size() < b.size();
}

SupportSet support_min(const SupportSet& s) {
    SupportSet mins;
    for (const auto& x : s) {
        bool dominated = false;
        for (const auto& y : s) {
            if (&x == &y) continue;
            if (expvec_leq(y, x) && !(expvec_leq(x, y))) { dominated = true; break; }
        }
        if (!dominated) {
            bool dup = false;
            for (const auto& m : mins)
                if (m == x) { dup = true; break; }
            if (!dup) mins.push_back(x);
        }
    }
    return mins;
}

GSeries::GSeries(VarSignature sig)
    : sig_(std::move(sig)),
      trunc_(static_cast<size_t>(sig_.total()), std::nullopt) {}

GSeries GSeries::constant(const VarSignature& sig, Coefficient c) {
    GSeries s(sig);
    if (!c.is_zero()) s.terms_.emplace(sig.expvec_zero(), std::move(c));
    return s;
}

GSeries GSeries::monomial(const VarSignature& sig, ExpVec e, Coefficient c) {
    GSeries s(sig);
    if (!c.is_zero()) {
        for (int v = 0; v < sig.total(); ++v) {
            if (e[v].sign() < 0)
                throw domain_error("GSeries: negative exponent on " + sig.name(v));
            if (!sig.is_generalized(v) && !e[v].is_natural())
                throw domain_error("GSeries: non-natural exponent on standard variable " +
                                   sig.name(v));
        }
        s.terms_.emplace(std::move(e), std::move(c));
    }
    return s;
}

GSeries GSeries::variable(const VarSignature& sig, int slot) {
    ExpVec e = sig.expvec_zero();
    e[slot] = sig.exp_rational(Rational(1));
    return monomial(sig, std::move(e), Coefficient(Rational(1)));
}

Coefficient GSeries::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient() : it->second;
}

Coefficient GSeries::constant_term() const {
    return coefficient(sig_.expvec_zero());
}

void GSeries::check_same_sig(const GSeries& o) const {
    if (sig_ != o.sig_) throw domain_error("GSeries: signature mismatch");
}

bool GSeries::below_truncation(const ExpVec& e) const {
    for (size_t v = 0; v < trunc_.size(); ++v)
        if (trunc_[v] && e[v].cmp(*trunc_[v]) != Cmp::LT) return false;
    return true;
}

void GSeries::add_term(const ExpVec& e, const Coefficient& c) {
    if (c.is_zero() || !below_truncation(e)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        Coefficient s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = std::move(s);
    }
}

std::optional<Exponent> trunc_meet(const std::optional<Exponent>& a,
                                   const std::optional<Exponent>& b) {
    if (!a) return b;
    if (!b) return a;
    return a->cmp(*b) == Cmp::GT ? *b : *a;
}

GSeries operator+(const GSeries& a, const GSeries& b) {
    a.check_same_sig(b);
    GSeries r(a.sig_);
    for (size_t v = 0; v < r.trunc_.size(); ++v)
        r.trunc_[v] = trunc_meet(a.trunc_[v], b.trunc_[v]);
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

GSeries operator-(const GSeries& a, const GSeries& b) {
    return a + (-b);
}

GSeries GSeries::operator-() const {
    GSeries r(sig_);
    r.trunc_ = trunc_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

GSeries GSeries::scaled(const Coefficient& c) const {
    GSeries r(sig_);
    r.trunc_ = trunc_;
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) {
        Coefficient p = t * c;
        if (!p.is_zero()) r.terms_.emplace(e, std::move(p));
    }
    return r;
}

GSeries operator*(const GSeries& a, const GSeries& b) {
    a.check_same_sig(b);
    GSeries r(a.sig_);
    // Least possible exponent of variable v in g, counting unknown terms
    // beyond the truncation of a zero series.
    auto ordv = [](const GSeries& g, int v) -> std::optional<Exponent> {
        if (!g.is_zero()) return g.var_order(v);
        return g.truncation()[v]; // nullopt = exact zero, no terms ever
    };
    for (size_t v = 0; v < r.trunc_.size(); ++v) {
        std::optional<Exponent> ta, tb;
        auto ob = ordv(b, static_cast<int>(v)), oa = ordv(a, static_cast<int>(v));
        if (a.trunc_[v] && ob) ta = *a.trunc_[v] + *ob;
        if (b.trunc_[v] && oa) tb = *b.trunc_[v] + *oa;
        r.trunc_[v] = trunc_meet(ta, tb);
    }
    if (a.is_zero() || b.is_zero()) return r; // zero, with honest truncation
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(expvec_add(ea, eb), ca * cb);
    return r;
}

GSeries GSeries::pow(long k) const {
    if (k < 0) throw domain_error("GSeries::pow: negative power");
    GSeries acc = one(sig_), base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

bool GSeries::operator==(const GSeries& o) const {
    if (sig_ != o.sig_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

SupportSet GSeries::support() const {
    SupportSet s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

GSeries GSeries::monomial_divided(const ExpVec& e) const {
    GSeries r(sig_);
    for (size_t v = 0; v < trunc_.size(); ++v)
        if (trunc_[v]) r.trunc_[v] = *trunc_[v] - e[v];
    for (const auto& [t, c] : terms_) {
        if (!expvec_leq(e, t)) {
            GSeries mono = monomial(sig_, t, c);
            throw domain_error("not divisible: term " + mono.str() +
                               " is not a multiple of the monomial");
        }
        ExpVec q = expvec_sub(t, e);
        for (int v = 0; v < sig_.total(); ++v)
            if (!sig_.is_generalized(v) && !q[v].is_natural())
                throw domain_error("not divisible on standard variable " + sig_.name(v));
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

GSeries GSeries::monomial_multiplied(const ExpVec& e, const Coefficient& c) const {
    GSeries r(sig_);
    for (size_t v = 0; v < trunc_.size(); ++v)
        if (trunc_[v]) r.trunc_[v] = *trunc_[v] + e[v];
    if (c.is_zero()) return r;
    for (const auto& [t, cc] : terms_) {
        Coefficient p = cc * c;
        if (!p.is_zero()) r.terms_.emplace(expvec_add(t, e), std::move(p));
    }
    return r;
}

bool GSeries::is_unit() const {
    for (size_t v = 0; v < trunc_.size(); ++v)
        if (trunc_[v] && trunc_[v]->sign() <= 0)
            throw truncation_error("is_unit: truncation order 0 on " + sig_.name(static_cast<int>(v)));
    return !constant_term().is_zero();
}

GSeries GSeries::unit_inverse() const {
    Coefficient c0 = constant_term();
    if (c0.is_zero()) throw domain_error("not a unit: constant term is zero");
    Coefficient c0inv = c0.inverse();
    GSeries v = scaled(c0inv);
    v.add_term(sig_.expvec_zero(), Coefficient(Rational(-1))); // v = F/c0 - 1
    if (v.is_zero()) return constant(sig_, c0inv).with_truncation(trunc_);
    for (const auto& [e, c] : v.terms()) {
        bool dies = false;
        for (size_t s = 0; s < trunc_.size() && !dies; ++s)
            if (trunc_[s] && e[s].sign() > 0) dies = true;
        if (!dies)
            throw truncation_error("unit_inverse: needs a truncation order on a variable of " +
                                   v.str());
    }
    GSeries acc = one(sig_).with_truncation(trunc_);
    GSeries w = v.with_truncation(trunc_);
    long guard = 0;
    while (!w.is_zero()) {
        acc = acc + (guard % 2 == 0 ? -w : w);
        w = (w * v).with_truncation(trunc_);
        if (++guard > 100000)
            throw truncation_error("unit_inverse: geometric expansion did not terminate "
                                   "(insufficient truncation)");
    }
    return acc.scaled(c0inv);
}

GSeries GSeries::unit_power(const Rational& a) const {
    Coefficient c0 = constant_term();
    if (c0.is_zero()) throw domain_error("not a unit: constant term is zero");
    if (is_integer(a) && a >= 0) return pow(num(a).convert_to<long>());
    // c0^a exactly.
    Integer p = num(a), q = den(a);
    Coefficient head = c0.pow(p.convert_to<long>());
    Coefficient root(Rational(1));
    if (q != 1) {
        Coefficient base = head;
        bool neg = base.sign() < 0;
        if (neg && q % 2 == 0)
            throw domain_error("unit_power: negative leading coefficient under even root");
        Coefficient mag = neg ? -base : base;
        auto r = mag.nth_root(q.convert_to<unsigned>());
        if (!r)
            throw domain_error("unit_power: leading coefficient " + c0.str() +
                               " has no exact " + q.str() + "-th root in the field");
        root = neg ? -*r : *r;
        head = root;
    }
    GSeries v = scaled(c0.inverse());
    v.add_term(sig_.expvec_zero(), Coefficient(Rational(-1)));
    if (v.is_zero()) return constant(sig_, head).with_truncation(trunc_);
    for (const auto& [e, c] : v.terms()) {
        bool dies = false;
        for (size_t s = 0; s < trunc_.size() && !dies; ++s)
            if (trunc_[s] && e[s].sign() > 0) dies = true;
        if (!dies)
            throw truncation_error("unit_power: needs a truncation order on a variable of " +
                                   v.str());
    }
    // (1+v)^a = sum binom(a,k) v^k
    GSeries acc = one(sig_).with_truncation(trunc_);
    GSeries w = v.with_truncation(trunc_);
    Coefficient binom(Rational(1));
    Rational ak = a;
    long k = 1, guard = 0;
    while (!w.is_zero()) {
        binom = binom * Coefficient(ak) * Coefficient(Rational(1, k));
        if (binom.is_zero()) break;
        ak -= 1;
        acc = acc + w.scaled(binom);
        w = (w * v).with_truncation(trunc_);
        ++k;
        if (++guard > 100000)
            throw truncation_error("unit_power: binomial expansion did not terminate "
                                   "(insufficient truncation)");
    }
    return acc.scaled(head);
}

GSeries GSeries::unit_power(const Exponent& a) const {
    if (auto q = a.as_rational()) return unit_power(*q);
    // Irrational powers only for exactly-constant units equal to 1.
    GSeries v = *this - one(sig_).with_truncation(trunc_);
    if (v.is_zero() && constant_term().is_one()) return *this;
    throw domain_error("unit_power: irrational exponent " + a.str() +
                       " is not representable in the coefficient field");
}

GSeries GSeries::truncated(int slot, const Exponent& cutoff) const {
    GSeries r(sig_);
    r.trunc_ = trunc_;
    r.trunc_[slot] = trunc_meet(r.trunc_[slot], cutoff);
    for (const auto& [e, c] : terms_)
        if (e[slot].cmp(*r.trunc_[slot]) == Cmp::LT) r.terms_.emplace(e, c);
    return r;
}

GSeries GSeries::truncated_at_order(const Exponent& cutoff) const {
    GSeries r = *this;
    for (int v = 0; v < sig_.total(); ++v) r = r.truncated(v, cutoff);
    return r;
}

GSeries GSeries::with_truncation(std::vector<std::optional<Exponent>> t) const {
    GSeries r(sig_);
    r.trunc_ = std::move(t);
    for (const auto& [e, c] : terms_)
        if (r.below_truncation(e)) r.terms_.emplace(e, c);
    return r;
}

GSeries GSeries::derivative(int slot) const {
    if (sig_.is_generalized(slot))
        throw domain_error("derivative with respect to generalized variable " + sig_.name(slot));
    GSeries r(sig_);
    r.trunc_ = trunc_;
    if (r.trunc_[slot]) {
        Exponent t = *r.trunc_[slot] - sig_.exp_rational(Rational(1));
        r.trunc_[slot] = t.sign() < 0 ? sig_.exp_zero() : t;
    }
    for (const auto& [e, c] : terms_) {
        auto k = e[slot].as_natural();
        if (!k) throw internal_error("derivative: non-natural standard exponent");
        if (*k == 0) continue;
        ExpVec d = e;
        d[slot] = sig_.exp_rational(Rational(*k - 1));
        r.add_term(d, c * Coefficient(Rational(*k)));
    }
    return r;
}

std::optional<Exponent> GSeries::regularity_order(int slot) const {
    std::optional<Exponent> best;
    for (const auto& [e, c] : terms_) {
        bool pure = true;
        for (int v = 0; v < sig_.total() && pure; ++v)
            if (v != slot && !e[v].is_zero()) pure = false;
        if (!pure) continue;
        if (!best || e[slot].cmp(*best) == Cmp::LT) best = e[slot];
    }
    return best;
}

std::optional<SeriesNormal> GSeries::normal_form() const {
    SupportSet mins = support_minimals();
    if (mins.size() != 1) return std::nullopt;
    SeriesNormal nf{mins.front(), monomial_divided(mins.front())};
    return nf;
}

bool GSeries::is_normal() const { return normal_form().has_value(); }

GSeries GSeries::slice(int slot, const Exponent& e) const {
    GSeries r(sig_.with_removed(slot));
    for (size_t v = 0, w = 0; v < trunc_.size(); ++v) {
        if (static_cast<int>(v) == slot) continue;
        r.trunc_[w++] = trunc_[v];
    }
    for (const auto& [t, c] : terms_) {
        if (t[slot] != e) continue;
        ExpVec q;
        q.reserve(t.size() - 1);
        for (size_t v = 0; v < t.size(); ++v)
            if (static_cast<int>(v) != slot) q.push_back(t[v]);
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

std::vector<Exponent> GSeries::slot_exponents(int slot) const {
    std::vector<Exponent> out;
    for (const auto& [e, c] : terms_) {
        bool seen = false;
        for (const auto& x : out)
            if (x == e[slot]) { seen = true; break; }
        if (!seen) out.push_back(e[slot]);
    }
    std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
        return a.cmp(b) == Cmp::LT;
    });
    return out;
}

GSeries GSeries::set_var_zero(int slot) const {
    return slice(slot, sig_.exp_zero());
}

GSeries GSeries::embed(const VarSignature& full, int slot, const Exponent& e,
                       const GSeries& reduced) {
    GSeries r(full);
    for (size_t v = 0, w = 0; v < r.trunc_.size(); ++v) {
        if (static_cast<int>(v) == slot) continue;
        r.trunc_[v] = reduced.truncation()[w++];
    }
    for (const auto& [t, c] : reduced.terms()) {
        ExpVec q;
        q.reserve(t.size() + 1);
        for (size_t v = 0, w = 0; v < static_cast<size_t>(full.total()); ++v) {
            if (static_cast<int>(v) == slot) q.push_back(e);
            else q.push_back(t[w++]);
        }
        r.terms_.emplace(std::move(q), c);
    }
    return r;
}

std::optional<Exponent> GSeries::var_order(int slot) const {
    std::optional<Exponent> best;
    for (const auto& [e, c] : terms_)
        if (!best || e[slot].cmp(*best) == Cmp::LT) best = e[slot];
    return best;
}

bool GSeries::occurs(int slot) const {
    for (const auto& [e, c] : terms_)
        if (!e[slot].is_zero()) return true;
    return false;
}

std::optional<Exponent> GSeries::min_total_order() const {
    std::optional<Exponent> best;
    for (const auto& [e, c] : terms_) {
        Exponent s = sig_.exp_zero();
        for (const auto& x : e) s = s + x;
        if (!best || s.cmp(*best) == Cmp::LT) best = s;
    }
    return best;
}

double GSeries::eval_double(const std::vector<double>& point) const {
    double acc = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (size_t v = 0; v < e.size(); ++v) {
            double ex = e[v].to_double();
            if (ex == 0) continue;
            double x = point[v];
            if (x == 0) { t = 0; break; }
            if (sig_.is_generalized(static_cast<int>(v)) || !e[v].is_natural()) {
                t *= std::pow(x, ex);
            } else {
                t *= std::pow(x, static_cast<double>(*e[v].as_natural()));
            }
        }
        acc += t;
    }
    return acc;
}

std::optional<Coefficient> GSeries::eval_exact(const std::vector<Rational>& point) const {
    Coefficient acc;
    for (const auto& [e, c] : terms_) {
        Coefficient t = c;
        for (size_t v = 0; v < e.size(); ++v) {
            auto q = e[v].as_rational();
            if (!q) {
                if (point[v] == 1) continue;   // 1^irrational = 1
                if (point[v] == 0) { t = Coefficient(); break; } // 0^positive = 0
                return std::nullopt;
            }
            if (*q == 0) continue;
            if (point[v] == 0) {
                t = Coefficient();
                break;
            }
            if (point[v] < 0 && !is_integer(*q)) return std::nullopt;
            Integer p = num(*q), d = den(*q);
            Rational base = point[v];
            if (d != 1) {
                auto root = rational_nth_root(base < 0 ? Rational(-base) : base,
                                              d.convert_to<unsigned>());
                if (!root) return std::nullopt;
                base = base < 0 ? Rational(-*root) : *root;
            }
            t = t * Coefficient(rational_pow(base, p.convert_to<long>()));
        }
        acc = acc + t;
    }
    return acc;
}

std::string GSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c.sign() < 0;
        Coefficient a = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v].is_zero()) continue;
            std::string f = sig_.name(static_cast<int>(v));
            if (auto k = e[v].as_rational()) {
                if (*k != 1) {
                    if (is_integer(*k) && *k >= 0) f += "^" + to_string(*k);
                    else f += "^(" + to_string(*k) + ")";
                }
            } else {
                f += "^(" + e[v].str() + ")";
            }
            factors.push_back(std::move(f));
        }
        std::string coeff = a.str();
        if (factors.empty() || coeff != "1") {
            bool atomic = coeff.find(' ') == std::string::npos;
            factors.insert(factors.begin(), atomic ? coeff : "(" + coeff + ")");
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

} // namespace gps
