#include "doctest.h"

#include "gps/parser.hpp"

#include <random>

using namespace gps;

namespace {

const char* kHeader =
    "vars x : generalized, y : standard;\n";

ProblemFile parse_with_header(const std::string& body) {
    return parse_problem(kHeader + body);
}

GSeries random_series(const VarSignature& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 7), expn(0, 9), expd(1, 3), coef(-12, 12);
    GSeries f(s);
    for (int t = nterms(rng); t > 0; --t) {
        ExpVec e;
        for (int v = 0; v < s.total(); ++v) {
            if (s.is_generalized(v))
                e.push_back(s.exp_rational(Rational(expn(rng), expd(rng))));
            else
                e.push_back(s.exp_rational(Rational(expn(rng) % 5)));
        }
        int c = coef(rng);
        if (c) f.add_term(e, Coefficient(Rational(c)));
    }
    return f;
}

} // namespace

TEST_CASE("parse basic series") {
    auto pf = parse_with_header("f = y^2 - x^3;\n");
    const GSeries& f = pf.lookup("f");
    CHECK(f.term_count() == 2);
    const auto& s = pf.signature;
    CHECK(f.coefficient({s.exp_rational(0), s.exp_rational(2)}) == Coefficient(Rational(1)));
    CHECK(f.coefficient({s.exp_rational(3), s.exp_rational(0)}) == Coefficient(Rational(-1)));
}

TEST_CASE("parse fractional exponents and products") {
    auto pf = parse_with_header("g = x^(3/2) + 2*x*y^2;\n");
    const GSeries& g = pf.lookup("g");
    const auto& s = pf.signature;
    CHECK(g.term_count() == 2);
    CHECK(g.coefficient({s.exp_rational(Rational(3, 2)), s.exp_rational(0)}) ==
          Coefficient(Rational(1)));
    CHECK(g.coefficient({s.exp_rational(1), s.exp_rational(2)}) == Coefficient(Rational(2)));
}

TEST_CASE("parse basis declarations and irrational exponents") {
    auto pf = parse_problem(
        "basis sqrt2 = alg(t^2-2, [1.41,1.42]);\n"
        "vars x : generalized, z : standard;\n"
        "f = z^2 - x^(2*sqrt2);\n");
    const GSeries& f = pf.lookup("f");
    CHECK(f.term_count() == 2);
    auto slot = pf.basis->find("sqrt2");
    REQUIRE(slot);
    Exponent e(pf.basis, {Rational(0), Rational(2)});
    CHECK(f.coefficient({e, pf.signature.exp_rational(0)}) == Coefficient(Rational(-1)));
}

TEST_CASE("zeta partial sum via log sugar") {
    auto pf = parse_problem(
        "basis logn2 = interval([0.6931,0.6932]);\n"
        "basis logn3 = interval([1.0986,1.0987]);\n"
        "vars x : generalized;\n"
        "f = sum(n=1..4, x^(log(n)));\n");
    const GSeries& f = pf.lookup("f");
    // 1 + x^{log2} + x^{log3} + x^{2 log2}
    CHECK(f.term_count() == 4);
    Exponent l2(pf.basis, {Rational(0), Rational(1), Rational(0)});
    Exponent l3(pf.basis, {Rational(0), Rational(0), Rational(1)});
    CHECK(f.coefficient({pf.signature.exp_zero()}) == Coefficient(Rational(1)));
    CHECK(f.coefficient({l2}) == Coefficient(Rational(1)));
    CHECK(f.coefficient({l3}) == Coefficient(Rational(1)));
    CHECK(f.coefficient({l2.scaled(2)}) == Coefficient(Rational(1)));
}

TEST_CASE("render canonical examples") {
    auto pf = parse_with_header("f = y^2 - x^3;\nz = 0;\n");
    CHECK(render(pf.lookup("f")) == "-x^3 + y^2");
    CHECK(render(pf.lookup("z")) == "0");
}

TEST_CASE("directives") {
    auto pf = parse_problem(
        "vars x : generalized, z : standard;\n"
        "f = z^2 - x^3;\n"
        "solve f respect z order 20;\n");
    REQUIRE(pf.directives.size() == 1);
    CHECK(pf.directives[0].kind == "solve");
    CHECK(pf.directives[0].series == "f");
    CHECK(pf.directives[0].respected == "z");
    CHECK(pf.directives[0].options.at("order") == "20");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_with_header("f = y^2 -;\n"), parse_error);
    CHECK_THROWS_AS(parse_with_header("f = w^2;\n"), parse_error);       // undeclared
    CHECK_THROWS_AS(parse_with_header("f = y^(1/2);\n"), parse_error);   // non-integer std
    CHECK_THROWS_AS(parse_with_header("f = x^(0-3);\n"), parse_error);   // negative gen
    try {
        parse_problem("vars x : generalized;\nf = x^;\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 0);
    }
}

TEST_CASE("round trip parse(render(F)) == F on random series") {
    VarSignature s;
    s.m = 1;
    s.n = 1;
    s.names = {"x", "y"};
    s.basis = ExponentBasis::rational_only();
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        GSeries f = random_series(s, rng);
        GSeries g = parse_series(render(f), s);
        CHECK(f == g);
    }
}

TEST_CASE("fuzzed inputs never crash") {
    std::mt19937_64 rng(123);
    const std::string alphabet = "xyz123+-*/^()=;., abon#\nqrtsfg[]";
    std::uniform_int_distribution<size_t> len(0, 60), pick(0, alphabet.size() - 1);
    int parsed = 0;
    for (int i = 0; i < 10000; ++i) {
        std::string s;
        size_t L = len(rng);
        for (size_t k = 0; k < L; ++k) s += alphabet[pick(rng)];
        try {
            parse_problem(s);
            ++parsed;
        } catch (const parse_error&) {
        } catch (const domain_error&) {
        }
    }
    CHECK(parsed >= 0); // reaching here means no crash/uncaught exception
}
