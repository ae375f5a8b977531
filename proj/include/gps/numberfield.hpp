#pragma once

#include "gps/interval.hpp"
#include "gps/upoly.hpp"

#include <memory>
#include <string>

namespace gps {

// One real algebraic extension Q(theta). theta is pinned down by a monic
// squarefree defining polynomial together with an isolating interval whose
// endpoints are not roots and where the polynomial changes sign. The
// polynomial need not be irreducible: zero tests and inverses use gcd
// splits against the isolating interval, so arithmetic stays exact either
// way (dynamic evaluation).
class NumberField {
public:
    static std::shared_ptr<const NumberField> make(QPoly defining, QInterval iso,
                                                   std::string name = "theta");

    unsigned degree() const { return static_cast<unsigned>(minpoly_.degree()); }
    const QPoly& minpoly() const { return minpoly_; }
    const QInterval& interval() const { return iso_; }
    const std::string& generator_name() const { return name_; }

    // Bisect the isolating interval `rounds` times (exact endpoint arithmetic).
    QInterval refined(const QInterval& from, int rounds) const;

    // Does theta lie among the roots of h? Requires h | minpoly, h nonzero.
    bool is_root_of(const QPoly& h) const;

    // Reduce residue coefficients mod the defining polynomial.
    QPoly reduce(const QPoly& g) const;

    bool same(const NumberField& other) const;

private:
    QPoly minpoly_;   // monic, squarefree, degree >= 2
    QInterval iso_;
    std::string name_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

} // namespace gps
