#include <doctest.h>

#include <random>

#include "qcol/laurent.hpp"
#include "testutil.hpp"

using namespace qcol;
using qcol::test::P;

TEST_CASE("addition cancels and preserves identities") {
    CHECK(P("1-m") + P("m") == P("1"));
    CHECK(LaurentPoly() + P("7-13*m+7*m^2") == P("7-13*m+7*m^2"));
    CHECK(P("m^-1-1") + P("1-m^-1") == LaurentPoly());
    CHECK((P("m^-1-1") + P("1-m^-1")).is_zero());
}

TEST_CASE("products match the worked squares") {
    CHECK(P("1-m+m^2") * P("1-m+m^2") == P("1-2*m+3*m^2-2*m^3+m^4"));
    CHECK(-(P("m^2+4") * P("m^2-2")) == P("8-2*m^2-m^4"));
    CHECK(P("m^-1") * P("m") == P("1"));
}

TEST_CASE("evaluation mod n identifies m^-1 with the inverse") {
    const QuandleSpec q(3, 2);
    CHECK(q.m_inv == 2);
    CHECK(eval_mod(P("1-m+m^2"), q) == 0);   // value 3
    CHECK(eval_mod(P("1-3*m+m^2"), q) == 2);  // value -1
    CHECK(eval_mod(P("m^-1"), q) == 2);
    const QuandleSpec q15(15, 8);
    CHECK(q15.m_inv == 2);
    CHECK(eval_mod(P("1-4*m+5*m^2-4*m^3+m^4"), q15) == 12);
}

TEST_CASE("quandle spec validation") {
    CHECK_THROWS_AS(QuandleSpec(4, 2), std::invalid_argument);   // gcd != 1
    CHECK_THROWS_AS(QuandleSpec(3, 0), std::invalid_argument);   // m = 0
    CHECK_THROWS_AS(QuandleSpec(3, 3), std::invalid_argument);   // m >= n
    CHECK_THROWS_AS(QuandleSpec(1, 1), std::invalid_argument);   // no modulus 1
    CHECK_NOTHROW(QuandleSpec(2, 1));                            // m = 1 is legal
}

TEST_CASE("alexander normalization") {
    CHECK(normalize_alexander(P("-m^-1+1-m")) == P("1-m+m^2"));
    CHECK(normalize_alexander(P("7-13*m+7*m^2")) == P("7-13*m+7*m^2"));
    CHECK(normalize_alexander(P("m^3-3*m^4+m^5")) == P("1-3*m+m^2"));
    CHECK_THROWS_AS(normalize_alexander(LaurentPoly()), std::domain_error);
}

TEST_CASE("unit equality") {
    CHECK(unit_equal(P("1-3*m+m^2"), P("-m+3*m^2-m^3")));
    CHECK_FALSE(unit_equal(P("1-m+m^2"), P("1-3*m+m^2")));
    CHECK(unit_equal(LaurentPoly(), LaurentPoly()));
    CHECK_FALSE(unit_equal(LaurentPoly(), P("1")));
}

TEST_CASE("gcd convention: reduce mod n first, gcd(0,n)=n") {
    CHECK(gcd_mod(Int(0), 15) == 15);
    CHECK(gcd_mod(Int(-1), 3) == 1);
    CHECK(gcd_mod(Int(9), 3) == 3);
    CHECK(gcd_mod(Int(-3), 15) == 3);
    const QuandleSpec q(3, 2);
    CHECK(gcd_mod(P("1-m+m^2"), q) == 3);  // evaluates to 0 mod 3
}

TEST_CASE("parser round trips and grammar errors") {
    for (const char* s : {"7", "-13*m", "7*m^2", "m^-1", "1 - 3*m + m^2", "0",
                          "-m^-2 + 4 - m^64"}) {
        const LaurentPoly p = P(s);
        CHECK(LaurentPoly::parse(p.str()) == p);
    }
    CHECK(P("2+3") == P("5"));
    CHECK_THROWS_AS(LaurentPoly::parse(""), parse_error);
    CHECK_THROWS_AS(LaurentPoly::parse("m^65"), parse_error);
    CHECK_THROWS_AS(LaurentPoly::parse("m^-65"), parse_error);
    CHECK_THROWS_AS(LaurentPoly::parse("1 + + m"), parse_error);
    CHECK_THROWS_AS(LaurentPoly::parse("x"), parse_error);
    CHECK(P("7 - 13 m + 7 m^2") == P("7-13*m+7*m^2"));  // the '*' is optional
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(20240801);
    for (int iter = 0; iter < 300; ++iter) {
        const LaurentPoly a = test::random_poly(rng, 8, 50);
        const LaurentPoly b = test::random_poly(rng, 8, 50);
        const LaurentPoly c = test::random_poly(rng, 8, 50);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(77);
    const auto quandles = test::quandles_up_to(30);
    for (int iter = 0; iter < 12; ++iter) {
        const LaurentPoly a = test::random_poly(rng);
        const LaurentPoly b = test::random_poly(rng);
        for (const QuandleSpec& q : quandles) {
            CHECK(eval_mod(a * b, q) == eval_mod(a, q) * eval_mod(b, q) % q.n);
            CHECK(eval_mod(a + b, q) == (eval_mod(a, q) + eval_mod(b, q)) % q.n);
        }
    }
}

TEST_CASE("normalization is idempotent and unit-equal to its input") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        LaurentPoly p = test::random_poly(rng);
        if (p.is_zero()) continue;
        const LaurentPoly n1 = normalize_alexander(p);
        CHECK(normalize_alexander(n1) == n1);
        CHECK(unit_equal(p, n1));
        CHECK(n1.min_exp() == 0);
        CHECK(n1.coeff(0) > 0);
    }
}

TEST_CASE("exact division") {
    LaurentPoly q;
    CHECK(P("1-2*m+3*m^2-2*m^3+m^4").divide_exact(P("1-m+m^2"), q));
    CHECK(q == P("1-m+m^2"));
    CHECK(P("m").divide_exact(P("m^2"), q));
    CHECK(q == P("m^-1"));
    CHECK_FALSE(P("1-m+m^2").divide_exact(P("1+m"), q));
    CHECK_FALSE(P("3*m").divide_exact(P("2"), q));
}
