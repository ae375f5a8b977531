#include "gps/exponent.hpp"

#include "gps/errors.hpp"

#include <sstream>

namespace gps {

std::shared_ptr<const ExponentBasis> ExponentBasis::rational_only() {
    return make({});
}

std::shared_ptr<const ExponentBasis> ExponentBasis::make(std::vector<BasisGenerator> gens) {
    auto b = std::make_shared<ExponentBasis>();
    for (auto& g : gens) {
        if (g.enclosure.width() <= 0 && !g.minpoly)
            throw domain_error("basis generator '" + g.name + "': enclosure must have positive width");
        if (g.minpoly) {
            if (coeff_sign(g.minpoly->eval_at(g.enclosure.lo)) == 0 ||
                coeff_sign(g.minpoly->eval_at(g.enclosure.hi)) == 0)
                throw domain_error("basis generator '" + g.name + "': enclosure endpoint is a root");
            auto chain = g.minpoly->sturm_chain();
            if (sturm_count(chain, g.enclosure.lo, g.enclosure.hi) != 1)
                throw domain_error("basis generator '" + g.name +
                                   "': enclosure does not isolate one root");
        }
    }
    b->gens_ = std::move(gens);
    b->cache_.reserve(b->gens_.size());
    for (auto& g : b->gens_) b->cache_.push_back(g.enclosure);
    return b;
}

std::optional<size_t> ExponentBasis::find(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i + 1; // basis slot (0 = unit)
    return std::nullopt;
}

std::optional<std::vector<Rational>> ExponentBasis::product(size_t i, size_t j) const {
    if (i == 0 || j == 0) throw internal_error("ExponentBasis::product: unit slot");
    if (i != j) return std::nullopt;
    const auto& g = gens_[i - 1];
    if (!g.minpoly || g.minpoly->degree() != 2) return std::nullopt;
    // monic x^2 + c1 x + c0 = 0  =>  xi^2 = -c0 - c1 xi
    QPoly m = g.minpoly->monic();
    std::vector<Rational> coords(size(), Rational(0));
    coords[0] = -m.coeff(0);
    coords[i] = -m.coeff(1);
    return coords;
}

QInterval ExponentBasis::enclosure(size_t i, const Rational& eps) const {
    std::lock_guard<std::mutex> lk(mu_);
    QInterval cur = cache_[i - 1];
    const auto& g = gens_[i - 1];
    if (!g.minpoly) return cur; // no refinement procedure declared
    int rounds = 0;
    int slo = coeff_sign(g.minpoly->eval_at(cur.lo));
    while (cur.width() > eps && rounds < kRefineDepth) {
        Rational mid = cur.mid();
        int sm = coeff_sign(g.minpoly->eval_at(mid));
        if (sm == 0) { cur = QInterval(mid, mid); break; }
        if (sm == slo) cur = QInterval(mid, cur.hi);
        else cur = QInterval(cur.lo, mid);
        ++rounds;
    }
    cache_[i - 1] = cur;
    return cur;
}

Exponent::Exponent(BasisPtr basis, std::vector<Rational> coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
    if (!basis_) throw internal_error("Exponent: null basis");
    if (coords_.size() != basis_->size())
        throw domain_error("Exponent: coordinate vector length mismatch");
}

Exponent Exponent::rational(BasisPtr basis, Rational q) {
    std::vector<Rational> coords(basis->size(), Rational(0));
    coords[0] = std::move(q);
    return Exponent(std::move(basis), std::move(coords));
}

bool Exponent::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

std::optional<Rational> Exponent::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coords_[0];
}

bool Exponent::is_natural() const {
    return is_rational() && is_integer(coords_[0]) && coords_[0] >= 0;
}

std::optional<long> Exponent::as_natural() const {
    if (!is_natural()) return std::nullopt;
    return coords_[0].convert_to<long>();
}

void Exponent::check_same_basis(const Exponent& b) const {
    if (basis_.get() != b.basis_.get())
        throw domain_error("Exponent: basis mismatch");
}

Exponent operator+(const Exponent& a, const Exponent& b) {
    a.check_same_basis(b);
    std::vector<Rational> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return Exponent(a.basis_, std::move(c));
}

Exponent operator-(const Exponent& a, const Exponent& b) {
    a.check_same_basis(b);
    std::vector<Rational> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
    return Exponent(a.basis_, std::move(c));
}

Exponent Exponent::operator-() const {
    std::vector<Rational> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return Exponent(basis_, std::move(c));
}

Exponent Exponent::scaled(const Rational& q) const {
    std::vector<Rational> c(coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * q;
    return Exponent(basis_, std::move(c));
}

Exponent operator*(const Exponent& a, const Exponent& b) {
    a.check_same_basis(b);
    std::vector<Rational> c(a.coords_.size(), Rational(0));
    // rational x anything
    for (size_t i = 0; i < c.size(); ++i) c[i] += a.coords_[0] * b.coords_[i];
    for (size_t i = 1; i < c.size(); ++i) c[i] += a.coords_[i] * b.coords_[0];
    // irrational x irrational via the declared product table
    for (size_t i = 1; i < c.size(); ++i) {
        if (a.coords_[i] == 0) continue;
        for (size_t j = 1; j < c.size(); ++j) {
            if (b.coords_[j] == 0) continue;
            auto prod = a.basis_->product(i, j);
            if (!prod)
                throw domain_error("exponent leaves basis: product " +
                                   a.basis_->generator(i - 1).name + "*" +
                                   a.basis_->generator(j - 1).name + " is not declared");
            Rational f = a.coords_[i] * b.coords_[j];
            for (size_t k = 0; k < c.size(); ++k) c[k] += f * (*prod)[k];
        }
    }
    return Exponent(a.basis_, std::move(c));
}

Exponent Exponent::inverse() const {
    if (auto q = as_rational()) {
        if (*q == 0) throw domain_error("Exponent: inverse of zero");
        return rational(basis_, Rational(1) / *q);
    }
    // q*xi with xi^2 = r rational: 1/(q*xi) = xi/(q*r).
    size_t slot = 0;
    bool pure_single = (coords_[0] == 0);
    for (size_t i = 1; i < coords_.size() && pure_single; ++i) {
        if (coords_[i] != 0) {
            if (slot != 0) pure_single = false;
            else slot = i;
        }
    }
    if (pure_single && slot != 0) {
        if (auto prod = basis_->product(slot, slot)) {
            bool pure = true;
            for (size_t k = 1; k < prod->size(); ++k)
                if ((*prod)[k] != 0) pure = false;
            if (pure && (*prod)[0] != 0) {
                std::vector<Rational> c(coords_.size(), Rational(0));
                c[slot] = Rational(1) / (coords_[slot] * (*prod)[0]);
                return Exponent(basis_, std::move(c));
            }
        }
    }
    throw domain_error("exponent leaves basis: inverse of " + str() + " is not representable");
}

Cmp Exponent::cmp(const Exponent& b) const {
    check_same_basis(b);
    if (coords_ == b.coords_) return Cmp::EQ;
    Exponent d = *this - b;
    // Rational fast path.
    if (d.is_rational()) {
        int s = gps::sign(d.coords_[0]);
        return s < 0 ? Cmp::LT : Cmp::GT;
    }
    Rational eps(1, 2);
    for (int round = 0; round < ExponentBasis::kRefineDepth; ++round) {
        QInterval acc{d.coords_[0]};
        for (size_t i = 1; i < d.coords_.size(); ++i) {
            if (d.coords_[i] == 0) continue;
            acc = acc + basis_->enclosure(i, eps).scaled(d.coords_[i]);
        }
        if (auto s = acc.certified_sign()) {
            if (*s < 0) return Cmp::LT;
            if (*s > 0) return Cmp::GT;
            // exact zero of a nonzero coordinate vector: dishonest basis
            break;
        }
        eps /= 16;
    }
    throw unresolvable_comparison("exponent comparison unresolved: " + d.str() +
                                  " vs 0 (dishonest basis independence?)");
}

int Exponent::sign() const {
    if (is_rational()) return gps::sign(coords_[0]);
    Cmp c = cmp(zero(basis_));
    return c == Cmp::LT ? -1 : (c == Cmp::GT ? 1 : 0);
}

bool Exponent::is_zero() const {
    for (const auto& q : coords_)
        if (q != 0) return false;
    return true;
}

double Exponent::to_double() const {
    double v = gps::to_double(coords_[0]);
    for (size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        QInterval e = basis_->enclosure(i, Rational(1, Integer(1) << 60));
        v += gps::to_double(coords_[i]) * gps::to_double(e.mid());
    }
    return v;
}

std::string Exponent::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        const Rational& q = coords_[i];
        if (q == 0) continue;
        if (!first) os << (q > 0 ? " + " : " - ");
        else if (q < 0) os << "-";
        Rational a = q < 0 ? Rational(-q) : q;
        if (i == 0) os << to_string(a);
        else {
            if (a != 1) os << to_string(a) << "*";
            os << basis_->generator(i - 1).name;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace gps
