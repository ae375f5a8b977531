#pragma once

#include "gps/transforms.hpp"

#include <functional>

namespace gps {

// Z-slices of F, ascending in the Z-exponent; each slice lives over the
// signature with the Z slot removed.
std::vector<std::pair<Exponent, GSeries>> coefficient_family(const GSeries& f, int zslot);

// F = H1 * (Z^{a1} U1 + H2 Z^{a2} U2 + ... + Hd Z^{ad} Ud), exponents
// strictly decreasing, Hi normal over (X,Y), Ui units over (X,Y,Z).
struct PresEntry {
    Exponent alpha;
    GSeries h; // reduced signature; entries[0].h == 1
    GSeries u; // full signature unit
};

struct FinitePresentation {
    int zslot = -1;
    GSeries h1; // reduced signature, normal
    std::vector<PresEntry> entries;

    int order() const { return static_cast<int>(entries.size()); }
    const Exponent& alpha1() const { return entries.front().alpha; }
    // H1 * sum Hi Z^{ai} Ui, equal to the source series up to truncation.
    GSeries reconstruct(const VarSignature& full) const;
    // The bracket G (without the H1 factor).
    GSeries bracket(const VarSignature& full) const;
};

// Requires every Z-slice normal and the slices linearly ordered by division;
// throws domain_error otherwise. This is the loop from the existence proof:
// repeatedly split off the division-minimal slice (smallest Z-exponent on
// ties) and absorb everything above it into a unit.
FinitePresentation build_presentation(const GSeries& f, int zslot);

// A family of admissible transforms over the full signature (acting as the
// identity on Z) after which the Z-slices of f are normal and linearly
// ordered by division. Weights scale the pairwise-comparison supports.
using Normalizer = std::function<std::vector<AdmissibleTransform>(
    const std::vector<GSeries>& family, const std::vector<Rational>& weights,
    const VarSignature& full_sig, int zslot)>;

// Per-chart finite presentations of f: run the normalizer on the coefficient
// family, apply each chart, and build the presentation on it.
std::vector<std::pair<AdmissibleTransform, FinitePresentation>> finite_presentation(
    const GSeries& f, int zslot, const Normalizer& normalizer);

// G = A_d + A_{d-1} Z + ... + A_1 Z^{a1-1} + U Z^{a1} with A_i(0) = 0 and U
// a unit; d = a1 = the regularity order of G in standard Z.
struct TaylorForm {
    long alpha1 = 0;
    std::vector<GSeries> a; // a[i-1] = A_i over the reduced signature, i = 1..a1
    GSeries unit;           // full signature
    const GSeries& a_i(int i) const { return a[static_cast<size_t>(i - 1)]; }
};

TaylorForm taylor_form(const GSeries& g, int zslot);

// H over the reduced signature with H(0) = 0 such that the Z^{a1-1} slice of
// g composed with the translation Z = Z' + H vanishes up to truncation.
// Newton-style fixed point iteration; requires regularity order a1 >= 2.
GSeries tschirnhausen_center(const GSeries& g, int zslot);

// Convenience: the elementary transform realizing the translation by H.
ElementaryTransform translation_by(const GSeries& h, const VarSignature& full);

} // namespace gps
