#pragma once

#include "gps/coefficient.hpp"
#include "gps/exponent.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gps {

// Variables split into a generalized block (real nonnegative exponents) and
// a standard block (natural exponents).
struct VarSignature {
    int m = 0, n = 0;
    std::vector<std::string> names; // size m+n, generalized block first
    BasisPtr basis;

    int total() const { return m + n; }
    bool is_generalized(int slot) const { return slot < m; }
    const std::string& name(int slot) const { return names[slot]; }
    std::optional<int> slot_of(const std::string& nm) const;

    Exponent exp_zero() const { return Exponent::zero(basis); }
    Exponent exp_rational(Rational q) const { return Exponent::rational(basis, std::move(q)); }
    std::vector<Exponent> expvec_zero() const;

    bool operator==(const VarSignature& o) const;
    bool operator!=(const VarSignature& o) const { return !(*this == o); }

    VarSignature with_removed(int slot) const;
    VarSignature with_inserted(int slot, bool generalized, std::string nm) const;
    std::string fresh_name(const std::string& stem) const;
};

using ExpVec = std::vector<Exponent>;

bool expvec_leq(const ExpVec& a, const ExpVec& b); // componentwise real order
ExpVec expvec_add(const ExpVec& a, const ExpVec& b);
ExpVec expvec_sub(const ExpVec& a, const ExpVec& b); // caller ensures >= 0 where needed

// Strict total order on exponent tuples by real value, lexicographically.
// Used for term maps and canonical output.
struct ExpVecLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

using TermMap = std::map<ExpVec, Coefficient, ExpVecLess>;
using SupportSet = std::vector<ExpVec>;

// Antichain of componentwise-minimal tuples.
SupportSet support_min(const SupportSet& s);

// Finite-support truncated generalized power series.
class GSeries {
public:
    GSeries() = default;
    explicit GSeries(VarSignature sig);

    static GSeries zero(const VarSignature& sig) { return GSeries(sig); }
    static GSeries constant(const VarSignature& sig, Coefficient c);
    static GSeries one(const VarSignature& sig) { return constant(sig, Coefficient(Rational(1))); }
    static GSeries monomial(const VarSignature& sig, ExpVec e, Coefficient c);
    static GSeries variable(const VarSignature& sig, int slot);

    const VarSignature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    const std::vector<std::optional<Exponent>>& truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Coefficient coefficient(const ExpVec& e) const;
    Coefficient constant_term() const;

    // Ring operations (exact on represented terms, truncation propagated).
    friend GSeries operator+(const GSeries& a, const GSeries& b);
    friend GSeries operator-(const GSeries& a, const GSeries& b);
    friend GSeries operator*(const GSeries& a, const GSeries& b);
    GSeries operator-() const;
    GSeries scaled(const Coefficient& c) const;
    GSeries pow(long k) const;
    bool operator==(const GSeries& o) const;
    bool operator!=(const GSeries& o) const { return !(*this == o); }

    SupportSet support() const;
    SupportSet support_minimals() const { return support_min(support()); }

    // Exact division by a monomial; every support element must dominate e.
    GSeries monomial_divided(const ExpVec& e) const;
    GSeries monomial_multiplied(const ExpVec& e, const Coefficient& c) const;

    bool is_unit() const;
    // 1/F to the recorded truncation; requires a unit. If F = c exactly the
    // result is exact.
    GSeries unit_inverse() const;
    // F^a for rational a (F a unit). Fractional powers of the leading
    // coefficient must exist in the field.
    GSeries unit_power(const Rational& a) const;
    GSeries unit_power(const Exponent& a) const;

    GSeries truncated(int slot, const Exponent& cutoff) const;
    GSeries truncated_at_order(const Exponent& cutoff) const; // every variable
    GSeries with_truncation(std::vector<std::optional<Exponent>> t) const;

    GSeries derivative(int slot) const; // slot must be standard

    // Setting every variable except `slot` to zero, the least exponent of a
    // surviving term; nullopt if none are represented.
    std::optional<Exponent> regularity_order(int slot) const;

    // Monomial-times-unit decomposition when the support has a single
    // minimal element (valid up to the recorded truncation).
    std::optional<struct SeriesNormal> normal_form() const;
    bool is_normal() const;

    // All terms with the given exponent on `slot`, as a series over the
    // signature with `slot` removed.
    GSeries slice(int slot, const Exponent& e) const;
    // Distinct exponents of `slot` over the support, ascending.
    std::vector<Exponent> slot_exponents(int slot) const;
    GSeries set_var_zero(int slot) const; // result over reduced signature
    // Inverse of slice: multiply by slot^e and re-embed into `full`.
    static GSeries embed(const VarSignature& full, int slot, const Exponent& e,
                         const GSeries& reduced);

    // Least exponent of variable `slot` over the support (nullopt when zero).
    std::optional<Exponent> var_order(int slot) const;
    bool occurs(int slot) const;
    // Least total order (sum of exponents) over the support.
    std::optional<Exponent> min_total_order() const;

    double eval_double(const std::vector<double>& point) const;
    // Exact evaluation when every power of every point coordinate is exactly
    // representable in the coefficient field.
    std::optional<Coefficient> eval_exact(const std::vector<Rational>& point) const;

    std::string str() const;

    // Unsafe-ish building block used by the modules: inserts c at e dropping
    // zero coefficients and terms beyond the truncation.
    void add_term(const ExpVec& e, const Coefficient& c);

private:
    void check_same_sig(const GSeries& o) const;
    bool below_truncation(const ExpVec& e) const;

    VarSignature sig_;
    TermMap terms_;
    std::vector<std::optional<Exponent>> trunc_;
};

struct SeriesNormal {
    ExpVec monomial;
    GSeries unit;
};

// min of two truncation bounds (nullopt = unbounded).
std::optional<Exponent> trunc_meet(const std::optional<Exponent>& a,
                                   const std::optional<Exponent>& b);

} // namespace gps
