#pragma once

#include "gps/interval.hpp"
#include "gps/upoly.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace gps {

struct BasisGenerator {
    std::string name;
    QInterval enclosure;                // declared certified enclosure, positive width
    std::optional<QPoly> minpoly;       // enables refinement and square products
};

// The exponent field K: Q-span of (1, xi_1, ..., xi_k) for declared real
// generators. Basis element 0 is always the constant 1.
class ExponentBasis {
public:
    static std::shared_ptr<const ExponentBasis> rational_only();
    static std::shared_ptr<const ExponentBasis> make(std::vector<BasisGenerator> gens);

    size_t size() const { return gens_.size() + 1; } // including the unit
    size_t generator_count() const { return gens_.size(); }
    const BasisGenerator& generator(size_t i) const { return gens_[i]; } // 0-based, excludes unit
    std::optional<size_t> find(const std::string& name) const;

    // Coordinates of xi_i * xi_j in the basis, when derivable (i == j with a
    // declared quadratic minimal polynomial). Indices are 1-based basis slots.
    std::optional<std::vector<Rational>> product(size_t i, size_t j) const;

    // Current enclosure of generator slot i (1-based), refined at least to
    // width <= eps when a minimal polynomial is available.
    QInterval enclosure(size_t i, const Rational& eps) const;

    static constexpr int kRefineDepth = 256;

private:
    std::vector<BasisGenerator> gens_;
    mutable std::mutex mu_;
    mutable std::vector<QInterval> cache_; // monotonically refined enclosures
};

using BasisPtr = std::shared_ptr<const ExponentBasis>;

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// An element of K as an exact rational coordinate vector over a basis.
class Exponent {
public:
    Exponent() = default;
    Exponent(BasisPtr basis, std::vector<Rational> coords);
    static Exponent rational(BasisPtr basis, Rational q);
    static Exponent zero(BasisPtr basis) { return rational(std::move(basis), Rational(0)); }

    const BasisPtr& basis() const { return basis_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& rational_part() const { return coords_[0]; }
    bool is_rational() const;
    // Exact rational value when is_rational().
    std::optional<Rational> as_rational() const;
    bool is_natural() const; // nonnegative integer-valued rational
    std::optional<long> as_natural() const;

    friend Exponent operator+(const Exponent& a, const Exponent& b);
    friend Exponent operator-(const Exponent& a, const Exponent& b);
    Exponent operator-() const;
    Exponent scaled(const Rational& q) const;
    // Product in K; requires the products of irrational parts to be
    // expressible in the basis, else throws ("exponent leaves basis").
    friend Exponent operator*(const Exponent& a, const Exponent& b);
    // Multiplicative inverse in K for rational values and single-generator
    // multiples whose squares are declared; else throws.
    Exponent inverse() const;

    bool operator==(const Exponent& b) const { return coords_ == b.coords_; }
    bool operator!=(const Exponent& b) const { return !(*this == b); }
    // Certified comparison of real values (refines enclosures, depth-capped).
    Cmp cmp(const Exponent& b) const;
    bool operator<(const Exponent& b) const { return cmp(b) == Cmp::LT; }
    bool operator<=(const Exponent& b) const { return cmp(b) != Cmp::GT; }
    int sign() const;
    bool is_zero() const;

    double to_double() const;
    std::string str() const; // e.g. "3/2", "sqrt2", "1/2*sqrt2", "2 + sqrt2"

private:
    void check_same_basis(const Exponent& b) const;

    BasisPtr basis_;
    std::vector<Rational> coords_; // length basis_->size()
};

} // namespace gps
