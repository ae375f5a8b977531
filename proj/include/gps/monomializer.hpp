#pragma once

#include "gps/presentation.hpp"

#include <atomic>
#include <memory>

namespace gps {

struct MonomializeConfig {
    long order = 12;               // working truncation order per variable
    long node_budget = 10000;      // chart-tree node cap
    unsigned ext_degree_budget = 2; // max degree of one algebraic extension
    int workers = 1;
};

// Lexicographic termination measure recorded at driver recursion boundaries:
// (variables the stage works in, z-kind rank: generalized=1/standard=0,
//  stage order: presentation order d or regularity order a1,
//  stage subcount: variables left in the working monomial / incomparable
//  support pairs, pair gap sum).
struct Measure {
    long vars = 0;
    int zkind = 0;
    long order = 0;
    long sub1 = 0;
    long sub2 = 0;

    bool operator<(const Measure& o) const;
    bool operator==(const Measure& o) const = default;
    std::string str() const;
};

struct BoundaryRecord {
    std::string kind; // which loop re-entry produced this boundary
    Measure parent, child;
    bool decreased() const { return child < parent; }
};

struct ChartNode {
    // Edge from the parent (empty at the root).
    std::optional<ElementaryTransform> via;
    GSeries series; // transformed series at this node
    int zslot = -1; // respected slot in this node's signature
    std::string stage;
    std::vector<std::unique_ptr<ChartNode>> children;
    // Leaf payload.
    std::optional<SeriesNormal> normal;
    bool infinity_leaf = false; // final almost-respecting chart

    bool is_leaf() const { return children.empty(); }
};

struct ChartLeaf {
    const ChartNode* node;
    AdmissibleTransform chain; // root -> leaf composition
    int zslot;                 // respected slot at the leaf
};

struct ChartTree {
    VarSignature root_sig;
    int root_zslot = -1;
    std::unique_ptr<ChartNode> root;
    std::vector<BoundaryRecord> boundaries;
    long node_count = 0;

    std::vector<ChartLeaf> leaves() const;
    // zero when every recorded boundary strictly decreased
    long measure_violations() const;
};

// The full driver of the vertical monomialisation theorem: every leaf series
// is normal and every root-to-leaf chain almost respects the designated
// variable.
ChartTree monomialize(const GSeries& f, int zslot, const MonomializeConfig& cfg = {});

// Inductive-hypothesis engine: after the returned family of admissible
// transforms (identity on the z slot), every member of `family` is normal
// and the witness monomials, scaled per-member by `weights`, are linearly
// ordered by division. The family members must not involve the z slot.
ChartTree normalize_family(const std::vector<GSeries>& family,
                           const std::vector<Rational>& weights, int zslot,
                           const MonomializeConfig& cfg = {});

// Support-set principalization (Lemma-style, pure monomial data): after the
// family, the support ideal is principal on every leaf.
ChartTree principalize(const SupportSet& s, const VarSignature& sig,
                       const MonomializeConfig& cfg = {});

// Newton iteration for the order-one implicit function: H with
// g(X, H(X)) = 0 up to truncation; g regular of order 1 in standard z.
GSeries implicit_solve_order_one(const GSeries& g, int zslot);

// The finite blow-up centers at which the z = x_j (lambda + w) chart
// degenerates: real roots (positive ones for generalized z) of the edge
// polynomial, with multiplicities, plus a generic non-root witness.
struct CriticalCenters {
    std::vector<std::pair<Coefficient, int>> centers; // (lambda, multiplicity)
    Coefficient generic;
};
CriticalCenters critical_lambdas(const FPoly& edge, bool positive_only,
                                 unsigned ext_degree_budget);

// A Normalizer (see presentation.hpp) backed by normalize_family.
Normalizer make_normalizer(const MonomializeConfig& cfg);

} // namespace gps
