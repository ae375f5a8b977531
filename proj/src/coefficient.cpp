#include "gps/coefficient.hpp"

#include "gps/errors.hpp"

#include <sstream>

namespace gps {

Coefficient::Coefficient(FieldPtr field, QPoly residue)
    : field_(std::move(field)), rep_(std::move(residue)) {
    if (field_) {
        rep_ = field_->reduce(rep_);
        if (rep_.degree() < 1) field_.reset(); // value is rational; drop the field
    }
}

Coefficient Coefficient::generator(FieldPtr field) {
    return Coefficient(std::move(field), QPoly::monomial(Rational(1), 1));
}

FieldPtr Coefficient::unify(const Coefficient& a, const Coefficient& b) {
    if (a.field_ && b.field_) {
        if (!a.field_->same(*b.field_))
            throw domain_error("Coefficient: mixing distinct extension fields "
                               "(extension tower depth exceeds 1)");
        return a.field_;
    }
    return a.field_ ? a.field_ : b.field_;
}

bool Coefficient::is_zero() const {
    if (rep_.is_zero()) return true;
    if (!field_) return false;
    // g(theta) = 0 iff theta is a root of gcd(g, minpoly).
    QPoly g = QPoly::gcd(rep_, field_->minpoly());
    if (g.degree() == 0) return false;
    return field_->is_root_of(g);
}

int Coefficient::sign() const {
    if (!field_) return rep_.is_zero() ? 0 : coeff_sign(rep_.coeff(0));
    if (is_zero()) return 0;
    QInterval iso = field_->interval();
    for (int round = 0; round < 512; ++round) {
        // Interval evaluation of the residue at theta's enclosure.
        QInterval acc(Rational(0));
        for (int k = rep_.degree(); k >= 0; --k)
            acc = acc * iso + QInterval(rep_.coeff(k));
        if (auto s = acc.certified_sign()) return *s;
        iso = field_->refined(iso, 1);
        if (iso.lo == iso.hi) {
            Rational v = rep_.eval_at(iso.lo);
            return coeff_sign(v);
        }
    }
    throw unresolvable_comparison("Coefficient::sign did not converge");
}

std::optional<Rational> Coefficient::as_rational() const {
    if (!field_) return rep_.is_zero() ? Rational(0) : rep_.coeff(0);
    return std::nullopt;
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    return Coefficient(Coefficient::unify(a, b), a.rep_ + b.rep_);
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    return Coefficient(Coefficient::unify(a, b), a.rep_ - b.rep_);
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    return Coefficient(Coefficient::unify(a, b), a.rep_ * b.rep_);
}

Coefficient Coefficient::operator-() const {
    return Coefficient(field_, -rep_);
}

Coefficient Coefficient::inverse() const {
    if (!field_) {
        if (rep_.is_zero()) throw domain_error("Coefficient: division by zero");
        return Coefficient(Rational(1) / rep_.coeff(0));
    }
    if (is_zero()) throw domain_error("Coefficient: division by zero");
    // Invert modulo a shrinking chain of squarefree moduli that all keep
    // theta as a root; since the value is nonzero, theta is never a root of
    // the gcd that gets divided out.
    QPoly modulus = field_->minpoly();
    while (true) {
        QPoly g = QPoly::divmod(rep_, modulus).second;
        auto [d, u, v] = QPoly::extended_gcd(g, modulus);
        (void)v;
        if (d.degree() == 0) return Coefficient(field_, u);
        modulus = QPoly::divmod(modulus, d).first;
        if (modulus.degree() < 1)
            throw internal_error("Coefficient::inverse: modulus chain exhausted");
    }
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
    return a * b.inverse();
}

Coefficient Coefficient::pow(long e) const {
    if (e == 0) return Coefficient(Rational(1));
    if (e < 0) return inverse().pow(-e);
    Coefficient acc(Rational(1)), base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

QInterval Coefficient::enclosure(const Rational& eps) const {
    if (!field_) {
        Rational v = rep_.is_zero() ? Rational(0) : rep_.coeff(0);
        return QInterval(v, v);
    }
    QInterval iso = field_->interval();
    for (int round = 0; round < 512; ++round) {
        QInterval acc{Rational(0)};
        for (int k = rep_.degree(); k >= 0; --k)
            acc = acc * iso + QInterval(rep_.coeff(k));
        if (acc.width() <= eps) return acc;
        iso = field_->refined(iso, 1);
        if (iso.lo == iso.hi) {
            Rational v = rep_.eval_at(iso.lo);
            return QInterval(v, v);
        }
    }
    throw unresolvable_comparison("Coefficient::enclosure did not converge");
}

double Coefficient::to_double() const {
    if (!field_) return rep_.is_zero() ? 0.0 : gps::to_double(rep_.coeff(0));
    QInterval e = enclosure(Rational(1, Integer(1) << 80));
    return gps::to_double(e.mid());
}

std::optional<Coefficient> Coefficient::nth_root(unsigned q) const {
    if (q == 0) return std::nullopt;
    if (q == 1) return *this;
    if (auto r = as_rational()) {
        if (auto root = rational_nth_root(*r, q)) return Coefficient(*root);
    }
    return std::nullopt;
}

std::string Coefficient::str() const {
    if (!field_) return to_string(rep_.is_zero() ? Rational(0) : rep_.coeff(0));
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= rep_.degree(); ++k) {
        Rational c = rep_.coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = c < 0 ? Rational(-c) : c;
        if (k == 0) os << to_string(a);
        else {
            if (a != 1) os << to_string(a) << "*";
            os << field_->generator_name();
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Rational coeff_abs_upper(const Coefficient& c) {
    if (auto r = c.as_rational()) return *r < 0 ? Rational(-*r) : *r;
    QInterval e = c.enclosure(Rational(1, 16));
    Rational lo = e.lo < 0 ? Rational(-e.lo) : e.lo;
    Rational hi = e.hi < 0 ? Rational(-e.hi) : e.hi;
    return std::max(lo, hi);
}

} // namespace gps
