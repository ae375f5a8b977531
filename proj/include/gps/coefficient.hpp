#pragma once

#include "gps/numberfield.hpp"

#include <string>

namespace gps {

// An element of the coefficient field: a rational, or an element of Q(theta)
// for one number field per solver branch. Values are immutable; equality and
// zero tests are exact (they never depend on the residue representation).
class Coefficient {
public:
    Coefficient() : rep_(QPoly()) {}
    Coefficient(Rational q) : rep_(QPoly::constant(std::move(q))) { rep_.normalize(); }
    Coefficient(long v) : Coefficient(Rational(v)) {}
    Coefficient(FieldPtr field, QPoly residue);

    static Coefficient generator(FieldPtr field); // theta itself

    bool is_rational() const { return !field_; }
    bool is_zero() const;
    bool is_one() const { return (*this - Coefficient(Rational(1))).is_zero(); }
    // Exact sign of the real value.
    int sign() const;

    // Exact rational value if the element is (exactly) rational.
    std::optional<Rational> as_rational() const;
    const FieldPtr& field() const { return field_; }
    const QPoly& residue() const { return rep_; }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
    Coefficient operator-() const;
    Coefficient inverse() const;
    Coefficient pow(long e) const;

    bool operator==(const Coefficient& b) const { return (*this - b).is_zero(); }
    bool operator!=(const Coefficient& b) const { return !(*this == b); }

    // Certified enclosure of the real value with width <= eps (eps > 0).
    QInterval enclosure(const Rational& eps) const;
    double to_double() const;
    // Exact q-th root when it exists in the field (rational perfect powers
    // only; extension elements are not searched).
    std::optional<Coefficient> nth_root(unsigned q) const;

    std::string str() const;

private:
    static FieldPtr unify(const Coefficient& a, const Coefficient& b);

    FieldPtr field_; // null = plain rational
    QPoly rep_;      // residue mod field_->minpoly(); constant poly when rational
};

inline bool coeff_is_zero(const Coefficient& c) { return c.is_zero(); }
inline int coeff_sign(const Coefficient& c) { return c.sign(); }
Rational coeff_abs_upper(const Coefficient& c);

using FPoly = UPoly<Coefficient>;

} // namespace gps
