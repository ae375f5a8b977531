#include "gps/transforms.hpp"

#include "gps/errors.hpp"

#include <cmath>
#include <sstream>

namespace gps {

namespace {

// Rational positive lower bound of a positive exponent value.
Rational positive_lower_bound(const Exponent& e) {
    if (auto q = e.as_rational()) return *q;
    Rational eps(1, 4);
    for (int round = 0; round < 64; ++round) {
        QInterval acc{e.rational_part()};
        for (size_t i = 1; i < e.coords().size(); ++i) {
            if (e.coords()[i] == 0) continue;
            acc = acc + e.basis()->enclosure(i, eps).scaled(e.coords()[i]);
        }
        if (acc.lo > 0) return acc.lo;
        eps /= 16;
    }
    throw unresolvable_comparison("positive_lower_bound failed on " + e.str());
}

// Replaces standard slot w by the series r (same signature), exactly.
GSeries substitute_standard(const GSeries& f, int w, const GSeries& r) {
    const VarSignature& sig = f.signature();
    GSeries acc(sig);
    acc = acc.with_truncation(f.truncation());
    GSeries rpow = GSeries::one(sig);
    Exponent prev = sig.exp_zero();
    for (const Exponent& k : f.slot_exponents(w)) {
        auto kn = k.as_natural(), pn = prev.as_natural();
        if (!kn || !pn) throw internal_error("substitute_standard: non-natural exponent");
        for (long t = *pn; t < *kn; ++t) rpow = rpow * r;
        prev = k;
        GSeries c = GSeries::embed(sig, w, sig.exp_zero(), f.slice(w, k));
        acc = acc + c * rpow;
    }
    return acc;
}

} // namespace

ElementaryTransform::ElementaryTransform(Node node, VarSignature outer)
    : node_(std::move(node)), outer_(std::move(outer)), inner_(outer_) {
    const int m = outer_.m, n = outer_.n;
    if (auto* r = std::get_if<Ramification>(&node_)) {
        if (r->slot < 0 || r->slot >= m)
            throw domain_error("ramification: slot is not a generalized variable");
        if (r->gamma.sign() <= 0) throw domain_error("ramification: exponent must be positive");
    } else if (auto* ts = std::get_if<Tschirnhausen>(&node_)) {
        if (n < 1) throw domain_error("tschirnhausen: no standard variable to translate");
        if (ts->h.signature() != outer_.with_removed(m + n - 1))
            throw domain_error("tschirnhausen: H has the wrong signature");
        if (!ts->h.constant_term().is_zero())
            throw domain_error("tschirnhausen: H(0) != 0");
    } else if (auto* l = std::get_if<LinearT>(&node_)) {
        if (l->i < 0 || l->i >= n) throw domain_error("linear: index out of range");
        if (l->c.size() != static_cast<size_t>(l->i))
            throw domain_error("linear: coefficient tuple has wrong arity");
    } else if (auto* gg = std::get_if<BlowupGG>(&node_)) {
        if (gg->i < 0 || gg->i >= m || gg->j < 0 || gg->j >= m || gg->i == gg->j)
            throw domain_error("blow-up chart: bad generalized indices");
        if (gg->center == BlowupGG::finite) {
            if (gg->lambda.sign() <= 0)
                throw domain_error("blow-up chart: generalized center must be positive");
            inner_ = outer_.with_removed(gg->i);
            inner_ = inner_.with_inserted(inner_.m, false, outer_.fresh_name("w"));
        }
    } else if (auto* sg = std::get_if<BlowupSG>(&node_)) {
        if (sg->i < 0 || sg->i >= n || sg->j < 0 || sg->j >= m)
            throw domain_error("blow-up chart: bad mixed indices");
        if (sg->center != BlowupSG::finite) {
            inner_ = outer_.with_removed(m + sg->i);
            inner_ = inner_.with_inserted(inner_.m, true, outer_.fresh_name("u"));
        }
    } else if (auto* rf = std::get_if<Reflection>(&node_)) {
        if (rf->i < 0 || rf->i >= n) throw domain_error("reflection: index out of range");
        if (rf->sign != 1 && rf->sign != -1) throw domain_error("reflection: sign must be +-1");
        inner_ = outer_.with_removed(m + rf->i);
        inner_ = inner_.with_inserted(inner_.m, true, outer_.fresh_name("u"));
    }
}

std::optional<int> ElementaryTransform::map_slot(int s) const {
    const int m = outer_.m;
    if (auto* gg = as<BlowupGG>()) {
        if (gg->center != BlowupGG::finite) return s;
        if (s == gg->i) return std::nullopt;
        if (s < m) return s < gg->i ? s : s - 1;
        return s; // standard block: one gen removed, one std inserted in front
    }
    if (auto* sg = as<BlowupSG>()) {
        if (sg->center == BlowupSG::finite) return s;
        int w = m + sg->i;
        if (s < m) return s;
        if (s == w) return std::nullopt;
        return s < w ? s + 1 : s; // gen block grew by one
    }
    if (auto* rf = as<Reflection>()) {
        int w = m + rf->i;
        if (s < m) return s;
        if (s == w) return std::nullopt;
        return s < w ? s + 1 : s;
    }
    return s;
}

std::optional<int> ElementaryTransform::created_slot() const {
    if (auto* gg = as<BlowupGG>())
        if (gg->center == BlowupGG::finite) return inner_.m; // first standard slot
    if (auto* sg = as<BlowupSG>())
        if (sg->center != BlowupSG::finite) return inner_.m - 1; // last generalized slot
    if (as<Reflection>()) return inner_.m - 1;
    return std::nullopt;
}

bool ElementaryTransform::respects(int z) const {
    const int m = outer_.m, n = outer_.n;
    if (as<Ramification>()) return true;
    if (auto* ts = as<Tschirnhausen>()) {
        int w = m + n - 1;
        if (z == w) return true;
        return !ts->h.occurs(z); // H signature drops only the last standard slot
    }
    if (auto* l = as<LinearT>()) return m + l->i != z;
    if (auto* gg = as<BlowupGG>()) {
        if (gg->center == BlowupGG::zero) return gg->j != z;
        if (gg->center == BlowupGG::infinity) return gg->i != z;
        return gg->j != z; // finite: z may be the blown-up i (column survives via created slot)
    }
    if (auto* sg = as<BlowupSG>()) {
        if (sg->center == BlowupSG::finite) return sg->j != z;
        return m + sg->i != z; // infinity charts consume y_i
    }
    if (auto* rf = as<Reflection>()) return m + rf->i != z;
    return false;
}

bool ElementaryTransform::is_infinity_chart_on(int z) const {
    if (auto* gg = as<BlowupGG>())
        return gg->center == BlowupGG::infinity && gg->i == z;
    if (auto* sg = as<BlowupSG>())
        return sg->center != BlowupSG::finite && outer_.m + sg->i == z;
    return false;
}

std::string ElementaryTransform::kind_name() const {
    if (as<Ramification>()) return "ramification";
    if (as<Tschirnhausen>()) return "tschirnhausen";
    if (as<LinearT>()) return "linear";
    if (auto* gg = as<BlowupGG>()) {
        switch (gg->center) {
            case BlowupGG::zero: return "blowup_gg_zero";
            case BlowupGG::infinity: return "blowup_gg_inf";
            default: return "blowup_gg";
        }
    }
    if (auto* sg = as<BlowupSG>()) {
        switch (sg->center) {
            case BlowupSG::finite: return "blowup_sg";
            case BlowupSG::plus_infinity: return "blowup_sg_plus_inf";
            default: return "blowup_sg_minus_inf";
        }
    }
    return "reflection";
}

std::string ElementaryTransform::describe() const {
    std::ostringstream os;
    if (auto* r = as<Ramification>()) {
        os << outer_.name(r->slot) << " = " << outer_.name(r->slot) << "'^(" << r->gamma.str() << ")";
    } else if (auto* ts = as<Tschirnhausen>()) {
        const std::string& nm = outer_.name(outer_.total() - 1);
        os << nm << " = " << nm << "' + (" << ts->h.str() << ")";
    } else if (auto* l = as<LinearT>()) {
        os << "linear shear along " << outer_.name(outer_.m + l->i);
    } else if (auto* gg = as<BlowupGG>()) {
        if (gg->center == BlowupGG::zero)
            os << outer_.name(gg->i) << " = " << outer_.name(gg->j) << "*" << outer_.name(gg->i) << "'";
        else if (gg->center == BlowupGG::infinity)
            os << outer_.name(gg->j) << " = " << outer_.name(gg->i) << "'*" << outer_.name(gg->j) << "'";
        else
            os << outer_.name(gg->i) << " = " << outer_.name(gg->j) << "*(" << gg->lambda.str()
               << " + " << inner_.name(inner_.m) << ")";
    } else if (auto* sg = as<BlowupSG>()) {
        const std::string& yi = outer_.name(outer_.m + sg->i);
        if (sg->center == BlowupSG::finite)
            os << yi << " = " << outer_.name(sg->j) << "*(" << sg->lambda.str() << " + " << yi << "')";
        else
            os << outer_.name(sg->j) << " = " << inner_.name(inner_.m - 1) << "*" << outer_.name(sg->j)
               << "', " << yi << " = " << (sg->center == BlowupSG::plus_infinity ? "+" : "-")
               << inner_.name(inner_.m - 1);
    } else if (auto* rf = as<Reflection>()) {
        os << outer_.name(outer_.m + rf->i) << " = " << (rf->sign > 0 ? "+" : "-")
           << inner_.name(inner_.m - 1);
    }
    return os.str();
}

namespace {

GSeries apply_ramification(const GSeries& f, const ElementaryTransform& t, const Ramification& r) {
    GSeries out(t.inner());
    auto tr = f.truncation();
    if (tr[r.slot]) tr[r.slot] = *tr[r.slot] * r.gamma;
    out = out.with_truncation(tr);
    for (const auto& [e, c] : f.terms()) {
        ExpVec q = e;
        q[r.slot] = e[r.slot] * r.gamma;
        out.add_term(q, c);
    }
    return out;
}

GSeries apply_gg_zero(const GSeries& f, const ElementaryTransform& t, int i, int j) {
    GSeries out(t.inner());
    out = out.with_truncation(f.truncation());
    for (const auto& [e, c] : f.terms()) {
        ExpVec q = e;
        q[j] = e[j] + e[i];
        out.add_term(q, c);
    }
    return out;
}

GSeries apply_tschirnhausen(const GSeries& f, const ElementaryTransform& t, const Tschirnhausen& ts) {
    const VarSignature& sig = f.signature();
    int w = sig.total() - 1;
    GSeries h = GSeries::embed(sig, w, sig.exp_zero(), ts.h);
    GSeries r = GSeries::variable(sig, w) + h;
    GSeries out = substitute_standard(f, w, r);
    // Unknown terms beyond the w-truncation leak into other variables through
    // powers of H; clamp conservatively by H's minimal total order spread
    // over the variables H occupies.
    if (f.truncation()[w] && !ts.h.is_zero()) {
        Exponent W = *f.truncation()[w];
        Exponent theta = *ts.h.min_total_order();
        Rational th = positive_lower_bound(theta);
        if (th > 1) th = 1;
        int spread = 0;
        for (int v = 0; v < sig.total(); ++v)
            if (v != w && h.occurs(v)) ++spread;
        if (spread == 0) spread = 1;
        Exponent clamp = W.scaled(th / spread);
        auto tr = out.truncation();
        for (auto& b : tr) b = trunc_meet(b, clamp);
        out = out.with_truncation(tr);
    }
    return out;
}

GSeries apply_linear(const GSeries& f, const ElementaryTransform& t, const LinearT& l) {
    const VarSignature& sig = f.signature();
    GSeries out = f;
    for (int k = 0; k < l.i; ++k) {
        if (l.c[k].is_zero()) continue;
        int wk = sig.m + k, wi = sig.m + l.i;
        GSeries r = GSeries::variable(sig, wk) +
                    GSeries::variable(sig, wi).scaled(l.c[k]);
        std::optional<Exponent> W = out.truncation()[wk];
        out = substitute_standard(out, wk, r);
        if (W) {
            Exponent clamp = W->scaled(Rational(1, 2));
            auto tr = out.truncation();
            tr[wk] = trunc_meet(tr[wk], clamp);
            tr[wi] = trunc_meet(tr[wi], clamp);
            out = out.with_truncation(tr);
        }
    }
    return out;
}

GSeries apply_gg_finite(const GSeries& f, const ElementaryTransform& t, const BlowupGG& gg,
                        const std::optional<Exponent>& work_order) {
    const VarSignature& in = t.inner();
    const VarSignature& out_sig = f.signature();
    int newslot = in.m; // first standard slot of the inner signature
    GSeries out(in);

    // truncation: consumed variable leaks into j
    std::vector<std::optional<Exponent>> tr(in.total());
    bool fractional = false;
    for (const auto& [e, c] : f.terms())
        if (!e[gg.i].is_natural()) fractional = true;
    for (int s = 0; s < out_sig.total(); ++s) {
        auto ms = t.map_slot(s);
        if (!ms) continue;
        tr[*ms] = f.truncation()[s];
    }
    if (auto mj = t.map_slot(gg.j))
        tr[*mj] = trunc_meet(tr[*mj], f.truncation()[gg.i]);
    if (fractional) {
        if (!work_order)
            throw truncation_error("blow-up with fractional exponents needs a working order");
        tr[newslot] = work_order;
    }
    out = out.with_truncation(tr);

    // cache (1 + y/lambda)^a expansions per distinct exponent a
    std::map<std::string, GSeries> cache;
    GSeries ybase = GSeries::variable(in, newslot).with_truncation(tr);
    for (const auto& [e, c] : f.terms()) {
        ExpVec q = in.expvec_zero();
        for (int s = 0; s < out_sig.total(); ++s) {
            auto ms = t.map_slot(s);
            if (!ms) continue;
            q[*ms] = e[s];
        }
        Exponent a = e[gg.i];
        auto mj = t.map_slot(gg.j);
        q[*mj] = q[*mj] + a;
        std::string key = a.str();
        auto it = cache.find(key);
        if (it == cache.end()) {
            GSeries exp(in);
            if (auto nat = a.as_natural()) {
                // (lambda + y)^k exactly
                GSeries base = GSeries::constant(in, gg.lambda) + GSeries::variable(in, newslot);
                exp = base.pow(*nat);
            } else {
                // lambda^a (1 + y/lambda)^a
                Coefficient head(Rational(1));
                if (!(gg.lambda.is_one())) {
                    auto ar = a.as_rational();
                    if (!ar)
                        throw domain_error("blow-up center " + gg.lambda.str() +
                                           " raised to irrational exponent " + a.str() +
                                           " is not representable");
                    Integer p = num(*ar), qd = den(*ar);
                    Coefficient lp = gg.lambda.pow(p.convert_to<long>());
                    bool neg = lp.sign() < 0;
                    if (neg && qd % 2 == 0)
                        throw domain_error("blow-up center power undefined (negative base)");
                    Coefficient mag = neg ? -lp : lp;
                    auto root = mag.nth_root(qd.convert_to<unsigned>());
                    if (!root)
                        throw domain_error("blow-up center " + gg.lambda.str() + "^(" + a.str() +
                                           ") is not representable in the coefficient field");
                    head = neg ? -*root : *root;
                }
                GSeries u = GSeries::one(in).with_truncation(tr) +
                            ybase.scaled(gg.lambda.inverse());
                exp = u.unit_power(a).scaled(head);
            }
            it = cache.emplace(key, std::move(exp)).first;
        }
        out = out + it->second.monomial_multiplied(q, c);
    }
    return out;
}

GSeries apply_sg_finite(const GSeries& f, const ElementaryTransform& t, const BlowupSG& sg) {
    const VarSignature& sig = f.signature();
    int w = sig.m + sg.i;
    GSeries r = (GSeries::constant(sig, sg.lambda) + GSeries::variable(sig, w))
                    .monomial_multiplied([&] {
                        ExpVec e = sig.expvec_zero();
                        e[sg.j] = sig.exp_rational(Rational(1));
                        return e;
                    }(), Coefficient(Rational(1)));
    GSeries out = substitute_standard(f, w, r);
    auto tr = out.truncation();
    tr[sg.j] = trunc_meet(tr[sg.j], f.truncation()[w]);
    return out.with_truncation(tr);
}

GSeries apply_sg_infinity(const GSeries& f, const ElementaryTransform& t, const BlowupSG& sg) {
    const VarSignature& in = t.inner();
    const VarSignature& sig = f.signature();
    int w = sig.m + sg.i;
    int newslot = in.m - 1;
    int sign = sg.center == BlowupSG::plus_infinity ? 1 : -1;
    GSeries out(in);
    std::vector<std::optional<Exponent>> tr(in.total());
    for (int s = 0; s < sig.total(); ++s) {
        auto ms = t.map_slot(s);
        if (!ms) continue;
        tr[*ms] = f.truncation()[s];
    }
    tr[newslot] = f.truncation()[w];
    out = out.with_truncation(tr);
    for (const auto& [e, c] : f.terms()) {
        ExpVec q = in.expvec_zero();
        for (int s = 0; s < sig.total(); ++s) {
            auto ms = t.map_slot(s);
            if (!ms) continue;
            q[*ms] = e[s];
        }
        q[newslot] = e[w] + e[sg.j];
        Coefficient cc = c;
        auto k = e[w].as_natural();
        if (!k) throw internal_error("standard exponent not natural");
        if (sign < 0 && (*k % 2)) cc = -cc;
        out.add_term(q, cc);
    }
    return out;
}

GSeries apply_reflection(const GSeries& f, const ElementaryTransform& t, const Reflection& rf) {
    const VarSignature& in = t.inner();
    const VarSignature& sig = f.signature();
    int w = sig.m + rf.i;
    int newslot = in.m - 1;
    GSeries out(in);
    std::vector<std::optional<Exponent>> tr(in.total());
    for (int s = 0; s < sig.total(); ++s) {
        auto ms = t.map_slot(s);
        if (!ms) continue;
        tr[*ms] = f.truncation()[s];
    }
    tr[newslot] = f.truncation()[w];
    out = out.with_truncation(tr);
    for (const auto& [e, c] : f.terms()) {
        ExpVec q = in.expvec_zero();
        for (int s = 0; s < sig.total(); ++s) {
            auto ms = t.map_slot(s);
            if (!ms) continue;
            q[*ms] = e[s];
        }
        q[newslot] = e[w];
        Coefficient cc = c;
        auto k = e[w].as_natural();
        if (!k) throw internal_error("standard exponent not natural");
        if (rf.sign < 0 && (*k % 2)) cc = -cc;
        out.add_term(q, cc);
    }
    return out;
}

} // namespace

GSeries apply(const GSeries& f, const ElementaryTransform& t,
              const std::optional<Exponent>& work_order) {
    if (f.signature() != t.outer())
        throw domain_error("apply: series signature does not match the transform target");
    if (auto* r = t.as<Ramification>()) return apply_ramification(f, t, *r);
    if (auto* ts = t.as<Tschirnhausen>()) return apply_tschirnhausen(f, t, *ts);
    if (auto* l = t.as<LinearT>()) return apply_linear(f, t, *l);
    if (auto* gg = t.as<BlowupGG>()) {
        switch (gg->center) {
            case BlowupGG::zero: return apply_gg_zero(f, t, gg->i, gg->j);
            case BlowupGG::infinity: return apply_gg_zero(f, t, gg->j, gg->i);
            default: return apply_gg_finite(f, t, *gg, work_order);
        }
    }
    if (auto* sg = t.as<BlowupSG>()) {
        if (sg->center == BlowupSG::finite) return apply_sg_finite(f, t, *sg);
        return apply_sg_infinity(f, t, *sg);
    }
    return apply_reflection(f, t, *t.as<Reflection>());
}

const VarSignature& AdmissibleTransform::outer() const {
    if (chain.empty()) throw internal_error("empty chain has no signatures");
    return chain.front().outer();
}

const VarSignature& AdmissibleTransform::inner() const {
    if (chain.empty()) throw internal_error("empty chain has no signatures");
    return chain.back().inner();
}

std::optional<int> AdmissibleTransform::track_slot(int s) const {
    std::optional<int> cur = s;
    for (const auto& t : chain) {
        if (!cur) return std::nullopt;
        auto next = t.map_slot(*cur);
        if (!next && t.respects(*cur)) next = t.created_slot();
        cur = next;
    }
    return cur;
}

AdmissibleTransform compose(std::vector<ElementaryTransform> chain) {
    for (size_t k = 0; k + 1 < chain.size(); ++k)
        if (chain[k].inner() != chain[k + 1].outer())
            throw domain_error("compose: incompatible signatures at position " + std::to_string(k));
    return AdmissibleTransform{std::move(chain)};
}

GSeries apply_chain(const GSeries& f, const AdmissibleTransform& rho,
                    const std::optional<Exponent>& work_order) {
    GSeries cur = f;
    for (const auto& t : rho.chain) cur = apply(cur, t, work_order);
    return cur;
}

bool respects_chain(const AdmissibleTransform& rho, int z) {
    std::optional<int> cur = z;
    for (const auto& t : rho.chain) {
        if (!cur) return false;
        if (!t.respects(*cur)) return false;
        auto next = t.map_slot(*cur);
        if (!next) next = t.created_slot();
        cur = next;
    }
    return cur.has_value();
}

bool almost_respects_chain(const AdmissibleTransform& rho, int z) {
    std::optional<int> cur = z;
    for (size_t k = 0; k < rho.chain.size(); ++k) {
        const auto& t = rho.chain[k];
        if (!cur) return false;
        bool last = (k + 1 == rho.chain.size());
        if (!t.respects(*cur)) {
            return last && t.is_infinity_chart_on(*cur);
        }
        auto next = t.map_slot(*cur);
        if (!next) next = t.created_slot();
        cur = next;
    }
    return true;
}

SingularSet singular_set(const ElementaryTransform& t) {
    SingularSet s;
    if (auto* gg = t.as<BlowupGG>()) {
        if (gg->center == BlowupGG::zero) {
            s.inner_var = gg->j;
            s.image_vars = {gg->j, gg->i};
        } else if (gg->center == BlowupGG::infinity) {
            s.inner_var = gg->i;
            s.image_vars = {gg->i, gg->j};
        } else {
            s.inner_var = *t.map_slot(gg->j);
            s.image_vars = {gg->j, gg->i};
        }
    } else if (auto* sg = t.as<BlowupSG>()) {
        if (sg->center == BlowupSG::finite) {
            s.inner_var = sg->j;
            s.image_vars = {sg->j, t.outer().m + sg->i};
        } else {
            s.inner_var = t.inner().m - 1; // x'_{m+1} = 0  <=>  y_i = 0
            s.image_vars = {sg->j, t.outer().m + sg->i};
        }
    }
    return s;
}

std::vector<double> forward_point(const ElementaryTransform& t, const std::vector<double>& inner) {
    const VarSignature& in = t.inner();
    const VarSignature& out = t.outer();
    if (inner.size() != static_cast<size_t>(in.total()))
        throw domain_error("forward_point: dimension mismatch");
    std::vector<double> o(out.total(), 0.0);
    for (int s = 0; s < out.total(); ++s) {
        auto ms = t.map_slot(s);
        if (ms) o[s] = inner[*ms];
    }
    if (auto* r = t.as<Ramification>()) {
        o[r->slot] = std::pow(inner[r->slot], r->gamma.to_double());
    } else if (auto* ts = t.as<Tschirnhausen>()) {
        int w = out.total() - 1;
        std::vector<double> base(inner.begin(), inner.end());
        base.erase(base.begin() + w);
        o[w] = inner[w] + ts->h.eval_double(base);
    } else if (auto* l = t.as<LinearT>()) {
        for (int k = 0; k < l->i; ++k)
            o[out.m + k] = inner[out.m + k] + l->c[k].to_double() * inner[out.m + l->i];
    } else if (auto* gg = t.as<BlowupGG>()) {
        if (gg->center == BlowupGG::zero) o[gg->i] = inner[gg->j] * inner[gg->i];
        else if (gg->center == BlowupGG::infinity) o[gg->j] = inner[gg->i] * inner[gg->j];
        else {
            int newslot = in.m;
            o[gg->i] = inner[*t.map_slot(gg->j)] * (gg->lambda.to_double() + inner[newslot]);
        }
    } else if (auto* sg = t.as<BlowupSG>()) {
        int w = out.m + sg->i;
        if (sg->center == BlowupSG::finite) {
            o[w] = inner[sg->j] * (sg->lambda.to_double() + inner[w]);
        } else {
            int newslot = in.m - 1;
            int sign = sg->center == BlowupSG::plus_infinity ? 1 : -1;
            o[sg->j] = inner[newslot] * inner[*t.map_slot(sg->j)];
            o[w] = sign * inner[newslot];
        }
    } else if (auto* rf = t.as<Reflection>()) {
        o[out.m + rf->i] = rf->sign * inner[in.m - 1];
    }
    return o;
}

std::vector<double> forward_point(const AdmissibleTransform& rho, const std::vector<double>& leaf) {
    std::vector<double> cur = leaf;
    for (auto it = rho.chain.rbegin(); it != rho.chain.rend(); ++it)
        cur = forward_point(*it, cur);
    return cur;
}

std::vector<double> inverse_point(const ElementaryTransform& t, const std::vector<double>& outer) {
    const VarSignature& in = t.inner();
    const VarSignature& out = t.outer();
    std::vector<double> r(in.total(), 0.0);
    for (int s = 0; s < out.total(); ++s) {
        auto ms = t.map_slot(s);
        if (ms) r[*ms] = outer[s];
    }
    if (auto* rm = t.as<Ramification>()) {
        r[rm->slot] = std::pow(outer[rm->slot], 1.0 / rm->gamma.to_double());
    } else if (auto* ts = t.as<Tschirnhausen>()) {
        int w = out.total() - 1;
        std::vector<double> base(outer.begin(), outer.end());
        base.erase(base.begin() + w);
        r[w] = outer[w] - ts->h.eval_double(base);
    } else if (auto* l = t.as<LinearT>()) {
        for (int k = 0; k < l->i; ++k)
            r[out.m + k] = outer[out.m + k] - l->c[k].to_double() * outer[out.m + l->i];
    } else if (auto* gg = t.as<BlowupGG>()) {
        if (gg->center == BlowupGG::zero) r[gg->i] = outer[gg->i] / outer[gg->j];
        else if (gg->center == BlowupGG::infinity) r[gg->j] = outer[gg->j] / outer[gg->i];
        else {
            r[in.m] = outer[gg->i] / outer[gg->j] - gg->lambda.to_double();
        }
    } else if (auto* sg = t.as<BlowupSG>()) {
        int w = out.m + sg->i;
        if (sg->center == BlowupSG::finite) {
            r[w] = outer[w] / outer[sg->j] - sg->lambda.to_double();
        } else {
            int sign = sg->center == BlowupSG::plus_infinity ? 1 : -1;
            r[in.m - 1] = sign * outer[w];
            r[*t.map_slot(sg->j)] = outer[sg->j] / (sign * outer[w]);
        }
    } else if (auto* rf = t.as<Reflection>()) {
        r[in.m - 1] = rf->sign * outer[out.m + rf->i];
    }
    return r;
}

} // namespace gps
