#include "doctest.h"

#include "gps/coefficient.hpp"
#include "gps/exponent.hpp"
#include "gps/upoly.hpp"

#include <random>

using namespace gps;

namespace {

BasisPtr sqrt2_basis() {
    BasisGenerator g;
    g.name = "sqrt2";
    g.enclosure = QInterval(Rational(141, 100), Rational(142, 100));
    g.minpoly = QPoly({Rational(-2), Rational(0), Rational(1)}); // x^2 - 2
    return ExponentBasis::make({g});
}

Exponent exp_of(const BasisPtr& b, Rational r, Rational s) {
    return Exponent(b, {std::move(r), std::move(s)});
}

FieldPtr sqrt2_field() {
    return NumberField::make(QPoly({Rational(-2), Rational(0), Rational(1)}),
                             QInterval(Rational(1), Rational(2)));
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(*parse_rational("3/2") == Rational(3, 2));
    CHECK(*parse_rational("1.41") == Rational(141, 100));
    CHECK(*parse_rational("-7") == Rational(-7));
    CHECK(!parse_rational("x"));
    CHECK(*integer_nth_root(Integer(27), 3) == 3);
    CHECK(!integer_nth_root(Integer(26), 3));
    CHECK(*rational_nth_root(Rational(9, 4), 2) == Rational(3, 2));
    CHECK(simplest_in_interval(Rational(14, 10), Rational(15, 10)) == Rational(3, 2));
    CHECK(simplest_in_interval(Rational(-1, 3), Rational(1, 7)) == 0);
}

TEST_CASE("exp_add examples") {
    auto b = ExponentBasis::rational_only();
    auto q = [&](Rational r) { return Exponent::rational(b, r); };
    CHECK(q(Rational(3, 2)) + q(Rational(1, 2)) == q(Rational(2)));

    auto s = sqrt2_basis();
    CHECK(exp_of(s, 0, 1) + exp_of(s, 0, 0) == exp_of(s, 0, 1));
    // (1 + xi) + (2 - xi) = 3
    CHECK(exp_of(s, 1, 1) + exp_of(s, 2, -1) == exp_of(s, 3, 0));
}

TEST_CASE("exp_cmp examples") {
    auto b = ExponentBasis::rational_only();
    auto q = [&](Rational r) { return Exponent::rational(b, r); };
    CHECK(q(Rational(3, 2)).cmp(q(Rational(2))) == Cmp::LT);

    auto s = sqrt2_basis();
    CHECK(exp_of(s, 0, 1).cmp(exp_of(s, 0, 1)) == Cmp::EQ);
    // sqrt2 vs 7/5: refinement beyond the declared enclosure
    CHECK(exp_of(s, 0, 1).cmp(exp_of(s, Rational(7, 5), 0)) == Cmp::GT);
    CHECK(exp_of(s, 0, 1).cmp(exp_of(s, Rational(3, 2), 0)) == Cmp::LT);
}

TEST_CASE("exp_scale and products") {
    auto s = sqrt2_basis();
    CHECK(exp_of(s, Rational(3, 2), 0).scaled(2) == exp_of(s, 3, 0));
    CHECK(exp_of(s, 0, 1).scaled(Rational(1, 3)) == exp_of(s, 0, Rational(1, 3)));
    // sqrt2 * sqrt2 = 2 via the derived product table
    CHECK(exp_of(s, 0, 1) * exp_of(s, 0, 1) == exp_of(s, 2, 0));
    // (1/sqrt2) representable: sqrt2/2
    CHECK(exp_of(s, 0, 1).inverse() == exp_of(s, 0, Rational(1, 2)));

    // Without a minimal polynomial there is no product table.
    BasisGenerator g;
    g.name = "lg3";
    g.enclosure = QInterval(Rational(10986, 10000), Rational(10987, 10000));
    auto t = ExponentBasis::make({g});
    Exponent l = Exponent(t, {Rational(0), Rational(1)});
    CHECK_THROWS_AS(l * l, domain_error);
}

TEST_CASE("unresolvable comparison on dishonest basis") {
    // Declares "independent" generator that actually equals 3/2 exactly;
    // no minpoly means no refinement, so a comparison straddling the
    // enclosure cannot resolve.
    BasisGenerator g;
    g.name = "fake";
    g.enclosure = QInterval(Rational(149, 100), Rational(151, 100));
    auto b = ExponentBasis::make({g});
    Exponent e(b, {Rational(-3, 2), Rational(1)}); // fake - 3/2, straddles 0
    CHECK_THROWS_AS(e.cmp(Exponent::zero(b)), unresolvable_comparison);
}

TEST_CASE("coefficient field ops") {
    Coefficient a(Rational(2, 3)), b(Rational(1, 3));
    CHECK((a + b).is_one());

    auto f = sqrt2_field();
    Coefficient th = Coefficient::generator(f);
    CHECK(th * th == Coefficient(Rational(2)));
    // inv(1+theta) = theta - 1
    Coefficient inv = (Coefficient(Rational(1)) + th).inverse();
    CHECK(inv == th - Coefficient(Rational(1)));
    CHECK((th - Coefficient(Rational(1))).sign() > 0);
    CHECK((th - Coefficient(Rational(3, 2))).sign() < 0);
    CHECK_THROWS_AS(Coefficient().inverse(), domain_error);
}

TEST_CASE("coefficient zero test with reducible defining polynomial") {
    // x^2 - 1 is squarefree but reducible; theta isolated near 1.
    auto f = NumberField::make(QPoly({Rational(-1), Rational(0), Rational(1)}),
                               QInterval(Rational(1, 2), Rational(3, 2)));
    Coefficient th = Coefficient::generator(f);
    CHECK((th - Coefficient(Rational(1))).is_zero());     // theta == 1 discovered
    CHECK(!(th + Coefficient(Rational(1))).is_zero());
    CHECK((th + Coefficient(Rational(1))).inverse() ==
          Coefficient(Rational(1, 2)) * th); // 1/(1+theta) = 1/2 = theta/2
}

TEST_CASE("exp_cmp agrees with high-precision interval evaluation") {
    auto s = sqrt2_basis();
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> ndist(-20, 20), ddist(1, 9);
    for (int i = 0; i < 500; ++i) {
        Rational a(ndist(rng), ddist(rng)), b(ndist(rng), ddist(rng));
        Rational c(ndist(rng), ddist(rng)), d(ndist(rng), ddist(rng));
        Exponent x = exp_of(s, a, b), y = exp_of(s, c, d);
        Cmp got = x.cmp(y);
        // reference: interval evaluation at width 1e-30
        Rational eps = Rational(1, Integer(10));
        for (int k = 0; k < 29; ++k) eps /= 10;
        QInterval enc = s->enclosure(1, eps);
        QInterval vx = QInterval(a) + enc.scaled(b);
        QInterval vy = QInterval(c) + enc.scaled(d);
        if (vx.hi < vy.lo) CHECK(got == Cmp::LT);
        else if (vx.lo > vy.hi) CHECK(got == Cmp::GT);
        else CHECK(got == Cmp::EQ);
    }
}

TEST_CASE("exp_add associative and commutative") {
    auto s = sqrt2_basis();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ndist(-30, 30), ddist(1, 12);
    for (int i = 0; i < 200; ++i) {
        auto r = [&]() { return exp_of(s, Rational(ndist(rng), ddist(rng)),
                                       Rational(ndist(rng), ddist(rng))); };
        Exponent x = r(), y = r(), z = r();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
    }
}

TEST_CASE("coefficient field axioms on random samples") {
    auto f = sqrt2_field();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> ndist(-12, 12), ddist(1, 7);
    auto r = [&]() {
        return Coefficient(f, QPoly({Rational(ndist(rng), ddist(rng)),
                                     Rational(ndist(rng), ddist(rng))}));
    };
    for (int i = 0; i < 200; ++i) {
        Coefficient a = r(), b = r(), c = r();
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("root isolation") {
    // (x^2 - 2)(x - 1/2)
    QPoly p = QPoly({Rational(-2), Rational(0), Rational(1)}) *
              QPoly({Rational(-1, 2), Rational(1)});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(!roots[0].exact);                 // -sqrt2
    CHECK(roots[1].exact.value() == Rational(1, 2));
    CHECK(!roots[2].exact);                 // +sqrt2
    CHECK(roots[2].interval.lo * roots[2].interval.lo < 2);
    CHECK(roots[2].interval.hi * roots[2].interval.hi > 2);

    // multiplicities: (x-1)^2 (x+2)
    QPoly q = QPoly({Rational(-1), Rational(1)}) * QPoly({Rational(-1), Rational(1)}) *
              QPoly({Rational(2), Rational(1)});
    auto r2 = isolate_real_roots(q);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].exact.value() == Rational(-2));
    CHECK(r2[0].multiplicity == 1);
    CHECK(r2[1].exact.value() == Rational(1));
    CHECK(r2[1].multiplicity == 2);
}

TEST_CASE("sturm over extension coefficients") {
    auto f = sqrt2_field();
    Coefficient th = Coefficient::generator(f);
    // lambda^2 - 2 = (lambda - theta)(lambda + theta): roots +-theta
    FPoly p({Coefficient(Rational(-2)), Coefficient(), Coefficient(Rational(1))});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    // deg-1 factor check: p has theta as a root
    FPoly lin({-th, Coefficient(Rational(1))});
    auto [quo, rem] = FPoly::divmod(p, lin);
    CHECK(rem.is_zero());
    CHECK(quo.coeffs().size() == 2);
}
