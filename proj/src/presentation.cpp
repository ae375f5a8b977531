#include "gps/presentation.hpp"

#include "gps/errors.hpp"

namespace gps {

std::vector<std::pair<Exponent, GSeries>> coefficient_family(const GSeries& f, int zslot) {
    std::vector<std::pair<Exponent, GSeries>> out;
    for (const Exponent& e : f.slot_exponents(zslot))
        out.emplace_back(e, f.slice(zslot, e));
    return out;
}

GSeries FinitePresentation::bracket(const VarSignature& full) const {
    GSeries acc(full);
    for (const auto& ent : entries) {
        ExpVec ze = full.expvec_zero();
        ze[zslot] = ent.alpha;
        GSeries h_full = GSeries::embed(full, zslot, full.exp_zero(), ent.h);
        acc = acc + (h_full * ent.u).monomial_multiplied(ze, Coefficient(Rational(1)));
    }
    return acc;
}

GSeries FinitePresentation::reconstruct(const VarSignature& full) const {
    GSeries h1_full = GSeries::embed(full, zslot, full.exp_zero(), h1);
    return h1_full * bracket(full);
}

namespace {

// Division-minimal slice index: the witness monomial divides every other
// witness; smallest Z-exponent wins ties.
size_t pick_alpha1(const std::vector<std::pair<Exponent, GSeries>>& slices,
                   const std::vector<ExpVec>& witnesses) {
    for (size_t i = 0; i < slices.size(); ++i) {
        bool divides_all = true;
        for (size_t j = 0; j < slices.size() && divides_all; ++j)
            if (!expvec_leq(witnesses[i], witnesses[j])) divides_all = false;
        if (divides_all) return i; // slices ascend in Z-exponent, first hit = smallest
    }
    throw domain_error("build_presentation: slices are not linearly ordered by division");
}

} // namespace

FinitePresentation build_presentation(const GSeries& f, int zslot) {
    if (f.is_zero()) throw domain_error("build_presentation: zero series");
    const VarSignature& full = f.signature();

    auto slices = coefficient_family(f, zslot);
    std::vector<ExpVec> witnesses;
    std::vector<GSeries> units;
    for (auto& [e, s] : slices) {
        auto nf = s.normal_form();
        if (!nf)
            throw domain_error("build_presentation: slice at Z^(" + e.str() + ") is not normal");
        witnesses.push_back(nf->monomial);
        units.push_back(nf->unit);
    }

    FinitePresentation pres;
    pres.zslot = zslot;

    // Work on index ranges of the ascending slice list; each round removes
    // the picked slice and everything above it.
    std::vector<size_t> active(slices.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = i;

    size_t first_pick = SIZE_MAX;
    while (!active.empty()) {
        std::vector<std::pair<Exponent, GSeries>> sub;
        std::vector<ExpVec> subw;
        for (size_t i : active) {
            sub.push_back(slices[i]);
            subw.push_back(witnesses[i]);
        }
        size_t local = pick_alpha1(sub, subw);
        size_t pick = active[local];
        if (first_pick == SIZE_MAX) first_pick = pick;

        PresEntry ent;
        ent.alpha = slices[pick].first;
        // H_i = F_{alpha_i} / F_{alpha_1} = X^{w_i - w_1} U_i U_1^{-1}
        ent.h = slices[pick].second.monomial_divided(witnesses[first_pick]) *
                units[first_pick].unit_inverse();
        // U_i = 1 + sum_{alpha > alpha_i active} (F_alpha / F_{alpha_i}) Z^{alpha - alpha_i}
        GSeries u = GSeries::one(full);
        GSeries upick_inv = units[pick].unit_inverse();
        for (size_t j : active) {
            if (slices[j].first.cmp(ent.alpha) != Cmp::GT) continue;
            GSeries qj = slices[j].second.monomial_divided(witnesses[pick]) * upick_inv;
            ExpVec ze = full.expvec_zero();
            ze[zslot] = slices[j].first - ent.alpha;
            u = u + GSeries::embed(full, zslot, full.exp_zero(), qj)
                        .monomial_multiplied(ze, Coefficient(Rational(1)));
        }
        ent.u = u;
        pres.entries.push_back(std::move(ent));

        // keep only slices strictly below alpha_i
        std::vector<size_t> next;
        for (size_t j : active)
            if (slices[j].first.cmp(slices[pick].first) == Cmp::LT) next.push_back(j);
        active = std::move(next);
    }

    pres.h1 = slices[first_pick].second;
    // normalize: entry H's are relative to H1, the first entry gets H = 1
    return pres;
}

std::vector<std::pair<AdmissibleTransform, FinitePresentation>> finite_presentation(
    const GSeries& f, int zslot, const Normalizer& normalizer) {
    if (f.is_zero()) throw domain_error("finite_presentation: zero series");
    std::vector<GSeries> family;
    for (auto& [e, s] : coefficient_family(f, zslot)) family.push_back(s);
    std::vector<Rational> weights(family.size(), Rational(1));
    auto charts = normalizer(family, weights, f.signature(), zslot);
    std::vector<std::pair<AdmissibleTransform, FinitePresentation>> out;
    for (auto& rho : charts) {
        GSeries g = apply_chain(f, rho);
        int z_in = rho.empty() ? zslot : *rho.track_slot(zslot);
        out.emplace_back(std::move(rho), build_presentation(g, z_in));
    }
    return out;
}

TaylorForm taylor_form(const GSeries& g, int zslot) {
    const VarSignature& full = g.signature();
    if (full.is_generalized(zslot))
        throw domain_error("taylor_form: the respected variable must be standard");
    auto ro = g.regularity_order(zslot);
    if (!ro)
        throw truncation_error("taylor_form: not regular within truncation");
    long a1 = *ro->as_natural();

    TaylorForm tf;
    tf.alpha1 = a1;
    for (long i = 1; i <= a1; ++i) {
        GSeries ai = g.slice(zslot, full.exp_rational(Rational(a1 - i)));
        if (!ai.constant_term().is_zero())
            throw domain_error("taylor_form: A_" + std::to_string(i) +
                               "(0) != 0 (broken presentation upstream)");
        tf.a.push_back(std::move(ai));
    }
    // U = sum_{k >= a1} slice_k Z^{k-a1}
    GSeries u(full);
    for (const Exponent& e : g.slot_exponents(zslot)) {
        if (e.cmp(full.exp_rational(Rational(a1))) == Cmp::LT) continue;
        ExpVec ze = full.expvec_zero();
        ze[zslot] = e - full.exp_rational(Rational(a1));
        u = u + GSeries::embed(full, zslot, full.exp_zero(), g.slice(zslot, e))
                    .monomial_multiplied(ze, Coefficient(Rational(1)));
    }
    auto tr = g.truncation();
    if (tr[zslot]) tr[zslot] = *tr[zslot] - full.exp_rational(Rational(a1));
    tf.unit = u.with_truncation(tr);
    if (tf.unit.constant_term().is_zero())
        throw internal_error("taylor_form: unit slice has zero constant term");
    return tf;
}

ElementaryTransform translation_by(const GSeries& h, const VarSignature& full) {
    return ElementaryTransform(Tschirnhausen{h}, full);
}

GSeries tschirnhausen_center(const GSeries& g, int zslot) {
    const VarSignature& full = g.signature();
    if (zslot != full.total() - 1 || full.is_generalized(zslot))
        throw domain_error("tschirnhausen_center: Z must be the last, standard variable");
    auto ro = g.regularity_order(zslot);
    if (!ro) throw truncation_error("tschirnhausen_center: not regular within truncation");
    long a1 = *ro->as_natural();
    if (a1 < 2) throw domain_error("tschirnhausen_center: regularity order must be >= 2");

    VarSignature red = full.with_removed(zslot);
    GSeries h(red);
    Exponent za1 = full.exp_rational(Rational(a1)), za1m = full.exp_rational(Rational(a1 - 1));
    std::optional<Exponent> last_order;
    for (int round = 0; round < 64; ++round) {
        GSeries gt = h.is_zero() ? g : apply(g, translation_by(h, full));
        GSeries a1slice = gt.slice(zslot, za1m);
        if (a1slice.is_zero()) return h;
        // Newton step: delta = -A1 / (a1 * U(X, 0))
        GSeries u0 = gt.slice(zslot, za1).scaled(Coefficient(Rational(a1)));
        GSeries delta = a1slice.scaled(Coefficient(Rational(-1))) * u0.unit_inverse();
        h = h + delta;
        auto ord = a1slice.min_total_order();
        if (last_order && ord && ord->cmp(*last_order) != Cmp::GT)
            throw truncation_error("tschirnhausen_center: iteration failed to contract "
                                   "(insufficient truncation order)");
        last_order = ord;
    }
    throw truncation_error("tschirnhausen_center: iteration budget exhausted "
                           "(insufficient truncation order)");
}

} // namespace gps
