#include "doctest.h"

#include "gps/gseries.hpp"

#include <random>

using namespace gps;

namespace {

VarSignature sig_xy() {
    VarSignature s;
    s.m = 1;
    s.n = 1;
    s.names = {"x", "y"};
    s.basis = ExponentBasis::rational_only();
    return s;
}

VarSignature sig_x() {
    VarSignature s;
    s.m = 1;
    s.n = 0;
    s.names = {"x"};
    s.basis = ExponentBasis::rational_only();
    return s;
}

GSeries mono(const VarSignature& s, std::vector<Rational> exps, Rational c) {
    ExpVec e;
    for (auto& q : exps) e.push_back(s.exp_rational(q));
    return GSeries::monomial(s, std::move(e), Coefficient(std::move(c)));
}

// Random series with small rational-exponent support.
GSeries random_series(const VarSignature& s, std::mt19937_64& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expn(0, 8), expd(1, 2), coef(-9, 9);
    GSeries f(s);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        ExpVec e;
        for (int v = 0; v < s.total(); ++v) {
            if (s.is_generalized(v))
                e.push_back(s.exp_rational(Rational(expn(rng), expd(rng))));
            else
                e.push_back(s.exp_rational(Rational(expn(rng) % 5)));
        }
        f.add_term(e, Coefficient(Rational(coef(rng))));
    }
    return f;
}

} // namespace

TEST_CASE("gs_add and gs_mul examples") {
    auto s = sig_xy();
    // (x^{3/2} + y) + (-y) = x^{3/2}
    GSeries a = mono(s, {Rational(3, 2), 0}, 1) + mono(s, {0, 1}, 1);
    GSeries b = mono(s, {0, 1}, -1);
    CHECK(a + b == mono(s, {Rational(3, 2), 0}, 1));

    // (1+x)(1-x) = 1-x^2
    GSeries one = GSeries::one(s);
    GSeries x = GSeries::variable(s, 0);
    CHECK((one + x) * (one - x) == one - x * x);

    // (x^{1/2}+x)^2 = x + 2x^{3/2} + x^2
    GSeries h = mono(s, {Rational(1, 2), 0}, 1) + x;
    GSeries expect = mono(s, {1, 0}, 1) + mono(s, {Rational(3, 2), 0}, 2) + mono(s, {2, 0}, 1);
    CHECK(h * h == expect);

    GSeries wrong(sig_x());
    CHECK_THROWS_AS(a + wrong, domain_error);
}

TEST_CASE("support_min") {
    auto s = sig_xy();
    auto ev = [&](Rational a, Rational b) {
        return ExpVec{s.exp_rational(a), s.exp_rational(b)};
    };
    SupportSet in = {ev(2, 0), ev(0, 3), ev(1, 1)};
    CHECK(support_min(in).size() == 3);
    SupportSet in2 = {ev(1, 2), ev(2, 2), ev(1, 3)};
    auto m2 = support_min(in2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == ev(1, 2));

    // randomized vs brute force
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(0, 6);
    for (int iter = 0; iter < 20; ++iter) {
        SupportSet rnd;
        for (int i = 0; i < 50; ++i) rnd.push_back(ev(d(rng), d(rng)));
        auto mins = support_min(rnd);
        for (const auto& x : rnd) {
            bool dom = false;
            for (const auto& mn : mins)
                if (expvec_leq(mn, x)) dom = true;
            CHECK(dom);
        }
        for (const auto& a : mins)
            for (const auto& b : mins)
                if (!(a == b)) CHECK(!(expvec_leq(a, b)));
    }
}

TEST_CASE("monomial_divide examples") {
    auto s = sig_xy();
    GSeries f = mono(s, {2, 1}, 1) + mono(s, {3, 0}, 1); // x^2 y + x^3
    ExpVec x2{s.exp_rational(2), s.exp_rational(0)};
    GSeries q = f.monomial_divided(x2);
    CHECK(q == mono(s, {0, 1}, 1) + mono(s, {1, 0}, 1));

    GSeries g = mono(s, {Rational(3, 2), 0}, 1);
    ExpVec e32{s.exp_rational(Rational(3, 2)), s.exp_rational(0)};
    CHECK(g.monomial_divided(e32) == GSeries::one(s));

    GSeries h = mono(s, {Rational(3, 2), 0}, 1) + mono(s, {1, 0}, 1);
    ExpVec ex{s.exp_rational(1), s.exp_rational(0)};
    CHECK(h.monomial_divided(ex) ==
          mono(s, {Rational(1, 2), 0}, 1) + GSeries::one(s));
    CHECK_THROWS_AS(h.monomial_divided(e32), domain_error);
}

TEST_CASE("units") {
    auto s = sig_x();
    GSeries one = GSeries::one(s), x = GSeries::variable(s, 0);
    CHECK((one + x).is_unit());
    CHECK(!x.is_unit());

    Exponent N = s.exp_rational(8);
    GSeries u = (one - x).truncated_at_order(N);
    GSeries inv = u.unit_inverse();
    // 1 + x + x^2 + ... up to truncation
    GSeries expect(s);
    for (int k = 0; k < 8; ++k) expect.add_term({s.exp_rational(k)}, Coefficient(Rational(1)));
    expect = expect.truncated_at_order(N);
    CHECK(inv == expect);
    CHECK((u * inv).truncated_at_order(N) == GSeries::one(s).truncated_at_order(N));

    // (1+x)^{1/2} = 1 + x/2 - x^2/8 + x^3/16 - ...
    GSeries v = (one + x).truncated_at_order(s.exp_rational(4));
    GSeries r = v.unit_power(Rational(1, 2));
    CHECK(r.coefficient({s.exp_rational(0)}) == Coefficient(Rational(1)));
    CHECK(r.coefficient({s.exp_rational(1)}) == Coefficient(Rational(1, 2)));
    CHECK(r.coefficient({s.exp_rational(2)}) == Coefficient(Rational(-1, 8)));
    CHECK(r.coefficient({s.exp_rational(3)}) == Coefficient(Rational(1, 16)));
    CHECK_THROWS_AS(x.unit_inverse(), domain_error);
}

TEST_CASE("truncate examples") {
    auto s = sig_x();
    GSeries f = GSeries::one(s) + GSeries::variable(s, 0) + mono(s, {2}, 1);
    GSeries t = f.truncated(0, s.exp_rational(2));
    CHECK(t == (GSeries::one(s) + GSeries::variable(s, 0)).with_truncation(t.truncation()));
    CHECK(f.truncated(0, s.exp_rational(0)).is_zero());
    GSeries g = mono(s, {Rational(1, 2)}, 1) + mono(s, {Rational(3, 2)}, 1);
    CHECK(g.truncated(0, s.exp_rational(1)).terms().size() == 1);
}

TEST_CASE("partial derivative") {
    auto s = sig_xy();
    GSeries xy2 = mono(s, {1, 2}, 1);
    CHECK(xy2.derivative(1) == mono(s, {1, 1}, 2));
    CHECK(mono(s, {Rational(3, 2), 0}, 1).derivative(1).is_zero());
    GSeries one = GSeries::one(s), y = GSeries::variable(s, 1);
    GSeries p = (one + y) * (one + y) * (one + y);
    CHECK(p.derivative(1) == ((one + y) * (one + y)).scaled(Coefficient(Rational(3))));
    CHECK_THROWS_AS(xy2.derivative(0), domain_error);
}

TEST_CASE("regularity order") {
    VarSignature s;
    s.m = 1;
    s.n = 1;
    s.names = {"x", "z"};
    s.basis = ExponentBasis::rational_only();
    GSeries f = mono(s, {0, 2}, 1) + mono(s, {1, 3}, 1); // z^2 + x z^3
    auto d = f.regularity_order(1);
    REQUIRE(d);
    CHECK(*d->as_natural() == 2);
    GSeries g = mono(s, {1, 1}, 1); // x z
    CHECK(!g.regularity_order(1));
    GSeries h = mono(s, {0, 3}, 1) + mono(s, {0, 2}, -2);
    CHECK(*h.regularity_order(1)->as_natural() == 2);
}

TEST_CASE("is_normal") {
    auto s = sig_xy();
    GSeries f = mono(s, {2, 1}, 1) * (GSeries::one(s) + GSeries::variable(s, 0) +
                                      GSeries::variable(s, 1));
    auto nf = f.normal_form();
    REQUIRE(nf);
    CHECK(nf->monomial == ExpVec{s.exp_rational(2), s.exp_rational(1)});
    CHECK(nf->unit.constant_term().is_one());

    CHECK(!(GSeries::variable(s, 0) + GSeries::variable(s, 1)).is_normal());

    GSeries g = mono(s, {Rational(3, 2), 0}, 2) + mono(s, {Rational(3, 2), 1}, 1);
    auto n2 = g.normal_form();
    REQUIRE(n2);
    CHECK(n2->monomial == ExpVec{s.exp_rational(Rational(3, 2)), s.exp_rational(0)});
    CHECK(n2->unit == GSeries::constant(s, Coefficient(Rational(2))) + GSeries::variable(s, 1));

    // reconstruction X^a U = F
    CHECK(n2->unit.monomial_multiplied(n2->monomial, Coefficient(Rational(1))) == g);
}

TEST_CASE("ring axioms on random finite-support triples") {
    auto s = sig_xy();
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        GSeries a = random_series(s, rng), b = random_series(s, rng), c = random_series(s, rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("monomial divide of monomial multiple is identity") {
    auto s = sig_xy();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> expn(0, 6), expd(1, 2);
    for (int i = 0; i < 100; ++i) {
        GSeries g = random_series(s, rng);
        ExpVec alpha{s.exp_rational(Rational(expn(rng), expd(rng))),
                     s.exp_rational(Rational(expn(rng) % 4))};
        GSeries prod = g.monomial_multiplied(alpha, Coefficient(Rational(1)));
        CHECK(prod.monomial_divided(alpha) == g);
    }
}

TEST_CASE("unit inverse property on random units") {
    auto s = sig_xy();
    std::mt19937_64 rng(31);
    Exponent N = s.exp_rational(6);
    for (int i = 0; i < 100; ++i) {
        GSeries u = (GSeries::one(s) + random_series(s, rng, 4)).truncated_at_order(N);
        if (u.constant_term().is_zero()) continue;
        GSeries inv = u.unit_inverse();
        GSeries prod = (u * inv).truncated_at_order(N);
        // compare against 1 on the common truncation
        GSeries one = GSeries::one(s).with_truncation(prod.truncation());
        CHECK(prod == one);
    }
}
