#include "gps/numberfield.hpp"

#include "gps/errors.hpp"

namespace gps {

std::shared_ptr<const NumberField> NumberField::make(QPoly defining, QInterval iso,
                                                     std::string name) {
    auto f = std::make_shared<NumberField>();
    QPoly sf = defining.squarefree_part();
    if (sf.degree() < 2)
        throw domain_error("NumberField: defining polynomial must have degree >= 2 "
                           "after squarefree reduction");
    // Endpoints must not be roots and the interval must isolate one root.
    if (coeff_sign(sf.eval_at(iso.lo)) == 0 || coeff_sign(sf.eval_at(iso.hi)) == 0)
        throw domain_error("NumberField: isolating interval endpoint is a root");
    auto chain = sf.sturm_chain();
    if (sturm_count(chain, iso.lo, iso.hi) != 1)
        throw domain_error("NumberField: interval does not isolate exactly one root");
    f->minpoly_ = std::move(sf);
    f->iso_ = std::move(iso);
    f->name_ = std::move(name);
    return f;
}

QInterval NumberField::refined(const QInterval& from, int rounds) const {
    QInterval cur = from;
    int slo = coeff_sign(minpoly_.eval_at(cur.lo));
    for (int k = 0; k < rounds; ++k) {
        Rational mid = cur.mid();
        int sm = coeff_sign(minpoly_.eval_at(mid));
        if (sm == 0) return QInterval(mid, mid); // theta is rational after all
        if (sm == slo) cur = QInterval(mid, cur.hi);
        else cur = QInterval(cur.lo, mid);
    }
    return cur;
}

bool NumberField::is_root_of(const QPoly& h) const {
    if (h.is_zero()) throw internal_error("is_root_of: zero polynomial");
    if (h.degree() == 0) return false;
    QPoly q = QPoly::divmod(minpoly_, h).first; // cofactor; minpoly squarefree
    auto hc = h.sturm_chain();
    auto qc = q.sturm_chain();
    QInterval cur = iso_;
    for (int round = 0; round < 512; ++round) {
        if (cur.lo == cur.hi) return coeff_sign(h.eval_at(cur.lo)) == 0;
        // Endpoints of the isolating interval are non-roots of minpoly, hence
        // of h and q as well (their roots are among minpoly's).
        int ch = sturm_count(hc, cur.lo, cur.hi);
        int cq = q.degree() >= 1 ? sturm_count(qc, cur.lo, cur.hi) : 0;
        if (ch == 1 && cq == 0) return true;
        if (ch == 0) return false;
        cur = refined(cur, 1);
    }
    throw unresolvable_comparison("NumberField::is_root_of did not converge");
}

QPoly NumberField::reduce(const QPoly& g) const {
    if (g.degree() < minpoly_.degree()) return g;
    return QPoly::divmod(g, minpoly_).second;
}

bool NumberField::same(const NumberField& other) const {
    if (this == &other) return true;
    if (minpoly_.coeffs() != other.minpoly_.coeffs()) return false;
    return iso_.lo == other.iso_.lo && iso_.hi == other.iso_.hi;
}

} // namespace gps
