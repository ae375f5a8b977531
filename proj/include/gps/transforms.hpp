#pragma once

#include "gps/gseries.hpp"

#include <variant>
#include <vector>

namespace gps {

// Elementary transformations (x',y') -> (x,y). Slots are 0-based positions
// in the OUTER signature (where the substituted series lives); the rendered
// JSON uses the 1-based block indices.

struct Ramification {
    int slot;       // generalized
    Exponent gamma; // > 0
};

// Translates the last standard variable: y_n = y_n' + H(x, y_1..y_{n-1}).
struct Tschirnhausen {
    GSeries h; // over the outer signature with the last standard slot removed; H(0) = 0
};

// y_k = y_k' + c_k y_i' for standard k < i.
struct LinearT {
    int i; // 0-based index within the standard block
    std::vector<Coefficient> c; // size i
};

// Blow-up charts between two generalized variables.
struct BlowupGG {
    enum Center { zero, finite, infinity } center = zero;
    int i, j;           // slots; i != j
    Coefficient lambda; // for finite centers, > 0
};

// Blow-up charts moving a standard variable along a generalized one.
struct BlowupSG {
    enum Center { finite, plus_infinity, minus_infinity } center = finite;
    int i;              // 0-based index within the standard block
    int j;              // generalized slot
    Coefficient lambda; // finite center in R
};

// y_i = sign * x'_{m+1}.
struct Reflection {
    int i;    // 0-based index within the standard block
    int sign; // +1 / -1
};

class ElementaryTransform {
public:
    using Node = std::variant<Ramification, Tschirnhausen, LinearT, BlowupGG, BlowupSG, Reflection>;

    ElementaryTransform(Node node, VarSignature outer);

    const Node& node() const { return node_; }
    const VarSignature& outer() const { return outer_; }
    const VarSignature& inner() const { return inner_; }

    template <typename T>
    const T* as() const { return std::get_if<T>(&node_); }

    // Where an outer slot lands in the inner signature; nullopt for the
    // variable consumed by the transform.
    std::optional<int> map_slot(int outer_slot) const;
    // The slot of the freshly created inner variable, when one exists.
    std::optional<int> created_slot() const;

    // Def 3.4 criterion: the non-z components do not depend on z'.
    bool respects(int respected_outer_slot) const;
    // Allowed as the final factor of an almost-respecting chain: a blow-up
    // chart at infinity involving z.
    bool is_infinity_chart_on(int respected_outer_slot) const;

    std::string kind_name() const;
    std::string describe() const;

private:
    Node node_;
    VarSignature outer_, inner_;
};

// Exact substitution F |-> F("composed with" the transform). `work_order`
// caps binomial expansions in a freshly created variable when the expansion
// is infinite (fractional powers over finite centers); exact cases ignore it.
GSeries apply(const GSeries& f, const ElementaryTransform& t,
              const std::optional<Exponent>& work_order = std::nullopt);

struct AdmissibleTransform {
    std::vector<ElementaryTransform> chain; // chain[0] is the outermost factor

    bool empty() const { return chain.empty(); }
    const VarSignature& outer() const;
    const VarSignature& inner() const;
    // The respected slot tracked through the whole chain.
    std::optional<int> track_slot(int outer_slot) const;
};

AdmissibleTransform compose(std::vector<ElementaryTransform> chain);
GSeries apply_chain(const GSeries& f, const AdmissibleTransform& rho,
                    const std::optional<Exponent>& work_order = std::nullopt);

bool respects_chain(const AdmissibleTransform& rho, int respected_outer_slot);
bool almost_respects_chain(const AdmissibleTransform& rho, int respected_outer_slot);

// Lemma 3.5 data: the singular set S (zeroset of an inner variable) and its
// image T = nu(S x R) (common zeroset of two outer variables).
struct SingularSet {
    std::optional<int> inner_var;             // empty: nu is bijective everywhere
    std::vector<int> image_vars;              // outer variables pinned to zero on T
};
SingularSet singular_set(const ElementaryTransform& t);

// Numeric forward evaluation (inner point -> outer point).
std::vector<double> forward_point(const ElementaryTransform& t, const std::vector<double>& inner);
std::vector<double> forward_point(const AdmissibleTransform& rho, const std::vector<double>& leaf);
// Numeric inverse (outer point -> inner point) off the singular set.
std::vector<double> inverse_point(const ElementaryTransform& t, const std::vector<double>& outer);

} // namespace gps
