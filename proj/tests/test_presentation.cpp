#include "doctest.h"

#include "gps/parser.hpp"
#include "gps/presentation.hpp"

#include <random>

using namespace gps;

namespace {

VarSignature sig_xz() {
    VarSignature s;
    s.m = 1;
    s.n = 1;
    s.names = {"x", "z"};
    s.basis = ExponentBasis::rational_only();
    return s;
}

GSeries ser(const VarSignature& s, const std::string& text, int order = 16) {
    return parse_series(text, s).truncated_at_order(s.exp_rational(order));
}

} // namespace

TEST_CASE("coefficient_family examples") {
    auto s = sig_xz();
    GSeries f = parse_series("x*z + x^2*z^3 + x^3", s);
    auto fam = coefficient_family(f, 1);
    REQUIRE(fam.size() == 3);
    CHECK(fam[0].first == s.exp_rational(0));
    CHECK(fam[0].second.str() == "x^3");
    CHECK(fam[1].first == s.exp_rational(1));
    CHECK(fam[1].second.str() == "x");
    CHECK(fam[2].first == s.exp_rational(3));
    CHECK(fam[2].second.str() == "x^2");

    CHECK(coefficient_family(GSeries::zero(s), 1).empty());

    VarSignature g2;
    g2.m = 2;
    g2.n = 0;
    g2.names = {"x", "z"};
    g2.basis = ExponentBasis::rational_only();
    GSeries h = parse_series("z^(1/2)*x", g2);
    auto fam2 = coefficient_family(h, 1);
    REQUIRE(fam2.size() == 1);
    CHECK(fam2[0].first == g2.exp_rational(Rational(1, 2)));
}

TEST_CASE("build_presentation spec example") {
    auto s = sig_xz();
    GSeries f = ser(s, "x*z + x^2*z^3 + x^3");
    FinitePresentation p = build_presentation(f, 1);
    CHECK(p.order() == 2);
    CHECK(p.h1.str() == "x");
    CHECK(p.entries[0].alpha == s.exp_rational(1));
    CHECK(p.entries[0].h == GSeries::one(p.entries[0].h.signature())
                                .with_truncation(p.entries[0].h.truncation()));
    CHECK(p.entries[0].u == ser(s, "1 + x*z^2").with_truncation(p.entries[0].u.truncation()));
    CHECK(p.entries[1].alpha == s.exp_rational(0));
    CHECK(p.entries[1].h.str() == "x^2");
    CHECK(p.entries[1].u.constant_term().is_one());
    // reconstruction H1 (z(1+xz^2) + x^2) = F
    GSeries rec = p.reconstruct(s);
    CHECK(rec == f.with_truncation(rec.truncation()));
}

TEST_CASE("build_presentation of z^k unit") {
    auto s = sig_xz();
    GSeries f = ser(s, "z^2 + z^3");
    FinitePresentation p = build_presentation(f, 1);
    CHECK(p.order() == 1);
    CHECK(p.h1 == GSeries::one(p.h1.signature()).with_truncation(p.h1.truncation()));
    CHECK(p.entries[0].alpha == s.exp_rational(2));
    CHECK(p.entries[0].u == ser(s, "1 + z").with_truncation(p.entries[0].u.truncation()));
}

TEST_CASE("build_presentation needs ordered slices") {
    auto s = sig_xz();
    GSeries f = ser(s, "x + z*(1+x)*0 + z^2"); // slices 1*x? construct directly
    f = ser(s, "x*z + x^3"); // slices x^3, x: ordered fine
    CHECK_NOTHROW(build_presentation(f, 1));
    GSeries g = ser(s, "x + z^2*x + z^3"); // slices x, x, 1: ordered
    CHECK_NOTHROW(build_presentation(g, 1));
    GSeries bad = ser(s, "x + z*(x + x^2) + z*x"); // slice x+x^2+... not normal? x(1+x) normal!
    bad = ser(s, "1 + z*(x+z)"); // slice at z^1 is x, slice z^2 is 1, slice z^0 is 1 — ordered
    CHECK_NOTHROW(build_presentation(bad, 1));
}

TEST_CASE("taylor_form example") {
    auto s = sig_xz();
    GSeries g = ser(s, "x^3 + x*z^2 + z^4 + x*z^4");
    TaylorForm tf = taylor_form(g, 1);
    CHECK(tf.alpha1 == 4);
    CHECK(tf.a_i(4).str() == "x^3");
    CHECK(tf.a_i(2).str() == "x");
    CHECK(tf.a_i(1).is_zero());
    CHECK(tf.a_i(3).is_zero());
    CHECK(tf.unit == ser(s, "1 + x").with_truncation(tf.unit.truncation()));

    GSeries z2 = ser(s, "z^2");
    TaylorForm t2 = taylor_form(z2, 1);
    CHECK(t2.alpha1 == 2);
    CHECK(t2.a_i(1).is_zero());
    CHECK(t2.a_i(2).is_zero());

    // construct-then-decompose on random data
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> c(-5, 5), e(1, 4);
    for (int iter = 0; iter < 50; ++iter) {
        // G = A2 + A1 z + U z^2 with A_i(0) = 0
        VarSignature red = s.with_removed(1);
        GSeries a2(red), a1(red);
        int c2 = c(rng), c1 = c(rng);
        if (c2) a2.add_term({red.exp_rational(e(rng))}, Coefficient(Rational(c2)));
        if (c1) a1.add_term({red.exp_rational(e(rng))}, Coefficient(Rational(c1)));
        GSeries u = ser(s, "1 + x*z");
        GSeries g2 = GSeries::embed(s, 1, s.exp_zero(), a2) +
                     GSeries::embed(s, 1, s.exp_rational(1), a1) +
                     u.monomial_multiplied({s.exp_rational(0), s.exp_rational(2)},
                                           Coefficient(Rational(1)));
        TaylorForm t = taylor_form(g2, 1);
        REQUIRE(t.alpha1 == 2);
        CHECK(t.a_i(2) == a2.with_truncation(t.a_i(2).truncation()));
        CHECK(t.a_i(1) == a1.with_truncation(t.a_i(1).truncation()));
        CHECK(t.unit == u.with_truncation(t.unit.truncation()));
    }
}

TEST_CASE("tschirnhausen_center examples") {
    auto s = sig_xz();
    // complete the square: z^2 + 2xz + x^3 -> H = -x, residual z^2 + x^3 - x^2
    GSeries g = ser(s, "z^2 + 2*x*z + x^3");
    GSeries h = tschirnhausen_center(g, 1);
    VarSignature red = s.with_removed(1);
    CHECK(h == (-GSeries::variable(red, 0)).with_truncation(h.truncation()));
    GSeries gt = apply(g, translation_by(h, s));
    CHECK(gt.slice(1, s.exp_rational(1)).is_zero());
    CHECK(gt == ser(s, "z^2 + x^3 - x^2").with_truncation(gt.truncation()));

    // A1 already zero -> H = 0
    GSeries g0 = ser(s, "z^2 - x^2");
    CHECK(tschirnhausen_center(g0, 1).is_zero());

    // cubic: z^3 + 3xz^2 + x^5 -> H = -x kills the z^2 slice
    GSeries g3 = ser(s, "z^3 + 3*x*z^2 + x^5");
    GSeries h3 = tschirnhausen_center(g3, 1);
    CHECK(h3 == (-GSeries::variable(red, 0)).with_truncation(h3.truncation()));
    GSeries g3t = apply(g3, translation_by(h3, s));
    CHECK(g3t == ser(s, "z^3 - 3*x^2*z + 2*x^3 + x^5").with_truncation(g3t.truncation()));
    CHECK(*g3t.regularity_order(1)->as_natural() == 3);
}

TEST_CASE("tschirnhausen_center with series division") {
    auto s = sig_xz();
    // G = (1+x) z^2 + 2x z + x: A1 = 2x, U = 1+x
    GSeries g = ser(s, "z^2 + x*z^2 + 2*x*z + x");
    GSeries h = tschirnhausen_center(g, 1);
    GSeries gt = apply(g, translation_by(h, s));
    CHECK(gt.slice(1, s.exp_rational(1)).is_zero());
    // H = -x/(1+x) = -x + x^2 - x^3 + ...
    VarSignature red = s.with_removed(1);
    CHECK(h.coefficient({red.exp_rational(1)}) == Coefficient(Rational(-1)));
    CHECK(h.coefficient({red.exp_rational(2)}) == Coefficient(Rational(1)));
    CHECK(h.coefficient({red.exp_rational(3)}) == Coefficient(Rational(-1)));
}

TEST_CASE("presentation reconstruction on random division chains") {
    auto s = sig_xz();
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> zexp(0, 5), step(0, 2), c(1, 4), sgn(0, 1);
    for (int iter = 0; iter < 60; ++iter) {
        // slices with monomial coefficients whose x-exponents form a chain
        GSeries f(s);
        int a = 0;
        std::vector<int> zs;
        for (int k = 0; k <= 5; ++k)
            if (sgn(rng)) zs.push_back(k);
        for (int k : zs) {
            a += step(rng);
            int cc = c(rng) * (sgn(rng) ? 1 : -1);
            f.add_term({s.exp_rational(a), s.exp_rational(k)}, Coefficient(Rational(cc)));
        }
        if (f.is_zero()) continue;
        f = f.truncated_at_order(s.exp_rational(12));
        FinitePresentation p = build_presentation(f, 1);
        // alphas strictly decreasing, first entry h == 1
        for (size_t i = 0; i + 1 < p.entries.size(); ++i)
            CHECK(p.entries[i].alpha.cmp(p.entries[i + 1].alpha) == Cmp::GT);
        CHECK(static_cast<size_t>(p.order()) <= coefficient_family(f, 1).size());
        for (const auto& e : p.entries) {
            CHECK(e.h.is_normal());
            CHECK(!e.u.constant_term().is_zero());
        }
        GSeries rec = p.reconstruct(s);
        CHECK(rec == f.with_truncation(rec.truncation()));
    }
}
