#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdeform/laurent.hpp"
#include "test_util.hpp"

using namespace qdeform;
using qdeform::testutil::P;

TEST_CASE("construction and normalization") {
    CHECK(LaurentPoly().is_zero());
    CHECK(LaurentPoly(0).is_zero());
    CHECK(LaurentPoly::monomial(0, 5).is_zero());
    LaurentPoly p = LaurentPoly::from_terms({{2, 1}, {0, 3}, {2, -1}});
    CHECK(p == LaurentPoly(3));
    CHECK(p.min_deg() == 0);
    CHECK(p.max_deg() == 0);
}

TEST_CASE("basic arithmetic") {
    CHECK(P("1+q") + P("q") == P("1+2q"));
    CHECK(P("1+q") * P("1+q+q^2") == P("1+2q+2q^2+q^3"));
    CHECK(P("1-q+q^2") * P("1+3q+q^2") == P("1+2q-q^2+2q^3+q^4"));
    CHECK(P("1+q") - P("1+q") == LaurentPoly());
    CHECK((-P("1-q")) == P("-1+q"));
    CHECK(P("q^-2+q").shifted(2) == P("1+q^3"));
    CHECK(P("1+2q").scaled(3) == P("3+6q"));
}

TEST_CASE("eval at one") {
    CHECK(P("1+q+q^2").eval_one() == 3);
    CHECK(LaurentPoly().eval_one() == 0);
    CHECK(P("1+2q+3q^2+3q^3+2q^4+q^5").eval_one() == 12);
}

TEST_CASE("reverse substitutes q -> 1/q") {
    CHECK(P("1+2q").reversed() == P("2q^-1+1"));
    CHECK(P("1+3q+q^2").reversed() == P("q^-2+3q^-1+1"));
    CHECK(q_int(-2) == P("-q^-1-q^-2"));
    CHECK(q_int(-2).reversed() == P("-q-q^2"));
}

TEST_CASE("q-integers") {
    CHECK(q_int(3) == P("1+q+q^2"));
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == P("1"));
    CHECK(q_int(-1) == P("-q^-1"));
}

TEST_CASE("palindrome predicate") {
    CHECK(P("1+q+q^2").is_palindrome());
    CHECK_FALSE(P("1+2q").is_palindrome());
    CHECK(P("1+2q+q^2+2q^3+q^4").is_palindrome());
    CHECK(P("q^-1+q").is_palindrome());
    CHECK(LaurentPoly().is_palindrome());
    CHECK(P("1+q^3").is_palindrome());  // 1,0,0,1
}

TEST_CASE("unimodal predicate counts interior zeros") {
    CHECK(P("1+2q+3q^2+2q^3+q^4").is_unimodal());
    CHECK_FALSE(P("1+q^3").is_unimodal());  // 1,0,0,1
    CHECK(P("1+q+q^2").is_unimodal());
    CHECK(P("q^2").is_unimodal());
    CHECK_FALSE(P("2+q+3q^2").is_unimodal());
    CHECK(P("1+2q+2q^2+q^3").is_unimodal());
}

TEST_CASE("nonnegative coefficients") {
    CHECK(P("1+q").has_nonneg_coeffs());
    CHECK_FALSE(P("1-q+q^2").has_nonneg_coeffs());
    CHECK_FALSE(P("q^6+4q^4-2q^3+4q^2+1").has_nonneg_coeffs());
}

TEST_CASE("exact division") {
    auto q1 = exact_divide(P("1+q+q^2+q^3+q^4+q^5"), P("1+q+q^2"));
    REQUIRE(q1.has_value());
    CHECK(*q1 == P("1+q^3"));
    CHECK_FALSE(exact_divide(P("1+2q"), P("1+q")).has_value());
    auto q2 = exact_divide(P("q+q^3"), P("q^2"));
    REQUIRE(q2.has_value());
    CHECK(*q2 == P("q^-1+q"));
    CHECK_THROWS_AS(exact_divide(P("1"), LaurentPoly()), std::domain_error);
    // Division by a q-power unit times a factor.
    auto q3 = exact_divide(P("q^2+2q^3+q^4"), P("q+q^2"));
    REQUIRE(q3.has_value());
    CHECK(*q3 == P("q+q^2"));
}

TEST_CASE("gcd over the integer polynomials") {
    CHECK(poly_gcd(P("1+q") * P("1+q+q^2"), P("1+q")) == P("1+q"));
    CHECK(poly_gcd(P("1+q"), P("1+q+q^2")).is_one());
    CHECK(poly_gcd(P("2+2q"), P("4")) == P("2"));
    CHECK(poly_gcd(LaurentPoly(), P("-3-3q")) == P("3+3q"));
    // Common factors are found regardless of q-power units.
    CHECK(poly_gcd(P("q^3+q^4"), P("q^-1+1")) == P("1+q"));
}

TEST_CASE("parse/print round trip") {
    for (const char* text : {"0", "1", "-1", "q", "-q", "1 + 2*q + q^2", "-q^-2",
                             "1 - q + q^2", "3*q^-1 + 7*q^4"}) {
        LaurentPoly p = parse_poly(text);
        CHECK(parse_poly(p.str()) == p);
        CHECK(parse_poly(p.str_compact()) == p);
    }
    CHECK(P("1+2q+q^2") == P("1 + 2*q + q^2"));
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1 + + q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x^2"), std::invalid_argument);
}

TEST_CASE("random exactness properties") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 500; ++iter) {
        LaurentPoly a = testutil::random_poly(rng);
        LaurentPoly b = testutil::random_poly(rng);
        CHECK((a + b) - b == a);
        CHECK(a.reversed().reversed() == a);
        // eval_one is a ring morphism.
        CHECK((a * b).eval_one() == a.eval_one() * b.eval_one());
        CHECK((a + b).eval_one() == a.eval_one() + b.eval_one());
        if (!b.is_zero()) {
            auto quot = exact_divide(a * b, b);
            REQUIRE(quot.has_value());
            CHECK(*quot == a);
        }
        // Palindrome iff reversal equals a pure shift of the original.
        if (!a.is_zero())
            CHECK(a.is_palindrome() ==
                  (a.reversed() == a.shifted(-(a.min_deg() + a.max_deg()))));
    }
}

TEST_CASE("random gcd divides both arguments") {
    std::mt19937_64 rng(999);
    for (int iter = 0; iter < 200; ++iter) {
        LaurentPoly a = testutil::random_poly(rng, 4, 0, 4, 5);
        LaurentPoly b = testutil::random_poly(rng, 4, 0, 4, 5);
        LaurentPoly g = poly_gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(exact_divide(a, g).has_value());
        CHECK(exact_divide(b, g).has_value());
        // gcd * random common multiple is recovered.
        LaurentPoly m = testutil::random_poly(rng, 3, 0, 3, 4);
        if (!m.is_zero()) {
            LaurentPoly g2 = poly_gcd(a * m, b * m);
            CHECK(exact_divide(g2, g * m.shifted(-m.min_deg())).has_value());
        }
    }
}
