#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdeform/cf.hpp"

#include <random>

using namespace qdeform;

namespace {
CFWord reg(std::vector<std::int64_t> c) { return CFWord{CFFlavor::Regular, std::move(c)}; }
CFWord neg(std::vector<std::int64_t> c) { return CFWord{CFFlavor::Negative, std::move(c)}; }
}  // namespace

TEST_CASE("regular expansions are canonical and correct") {
    CHECK(regular_cf(5, 12).coeffs == std::vector<std::int64_t>{0, 2, 2, 2});
    CHECK(regular_cf(5, 3).coeffs == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(regular_cf(-5, 3).coeffs == std::vector<std::int64_t>{-2, 3});
    CHECK(regular_cf(-1, 4).coeffs == std::vector<std::int64_t>{-1, 1, 2, 1});
    CHECK(regular_cf(3, 1).coeffs == std::vector<std::int64_t>{2, 1});
    CHECK(regular_cf(0, 1).coeffs == std::vector<std::int64_t>{-1, 1});
    CHECK_THROWS_AS(regular_cf(1, 0), std::domain_error);
    CHECK_THROWS_AS(regular_cf(1, -2), std::domain_error);
}

TEST_CASE("negative expansions are canonical and correct") {
    // The ceiling algorithm fixes these expansions uniquely.
    CHECK(negative_cf(5, 12).coeffs == std::vector<std::int64_t>{1, 2, 4, 2});
    CHECK(negative_cf(3, 5).coeffs == std::vector<std::int64_t>{1, 3, 2});
    CHECK(negative_cf(12, 5).coeffs == std::vector<std::int64_t>{3, 2, 3});
    CHECK(negative_cf(-1, 4).coeffs == std::vector<std::int64_t>{0, 4});
    CHECK(negative_cf(5, 3).coeffs == std::vector<std::int64_t>{2, 3});
    CHECK(negative_cf(7, 1).coeffs == std::vector<std::int64_t>{7});
    CHECK(negative_cf(-5, 3).coeffs == std::vector<std::int64_t>{-1, 2, 2});
}

TEST_CASE("classical evaluation") {
    CHECK(eval_cf_classical(reg({0, 2, 2, 2})) == Rational(5, 12));
    CHECK(eval_cf_classical(neg({2, 3})) == Rational(5, 3));
    CHECK(eval_cf_classical(reg({2, -1, -1, 2})) == Rational(5, 3));
    CHECK(eval_cf_classical(neg({-1, 0, 3, 3})) == Rational(5, 3));
    CHECK(eval_cf_classical(neg({1, 2, 4, 2})) == Rational(5, 12));
    CHECK(eval_cf_classical(reg({7})) == Rational(7, 1));
    // 0 + 1/0 has a zero inner denominator.
    CHECK_THROWS_WITH_AS(eval_cf_classical(reg({0, 0})), "ill-defined word",
                         std::domain_error);
    CHECK_THROWS_AS(eval_cf_classical(reg({2, -1, 1})), std::domain_error);
    CHECK(eval_cf_classical(reg({1, 2, -2, 1})) == Rational(2, 1));
}

TEST_CASE("canonical flags") {
    CHECK(reg({1, 1, 1, 1}).is_canonical());
    CHECK_FALSE(reg({1, 1, 1}).is_canonical());   // odd length
    CHECK_FALSE(reg({1, 0, 1, 1}).is_canonical());
    CHECK(neg({-3, 2, 2}).is_canonical());
    CHECK_FALSE(neg({2, 1, 2}).is_canonical());
    CHECK(reg({-7, 1}).is_canonical());
}

TEST_CASE("round trip through evaluation") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> rdist(-300, 300), sdist(1, 300);
    for (int iter = 0; iter < 2000; ++iter) {
        Rational x(rdist(rng), sdist(rng));
        CFWord w1 = regular_cf(x.num, x.den);
        CFWord w2 = negative_cf(x.num, x.den);
        CHECK(w1.is_canonical());
        CHECK(w2.is_canonical());
        CHECK(eval_cf_classical(w1) == x);
        CHECK(eval_cf_classical(w2) == x);
    }
}

TEST_CASE("word and fraction parsing") {
    CHECK(parse_cf_word("[0,2,2,2]").flavor == CFFlavor::Regular);
    CHECK(parse_cf_word("[[1,3,2]]").flavor == CFFlavor::Negative);
    CHECK(parse_cf_word("[-2,3]").coeffs == std::vector<std::int64_t>{-2, 3});
    CHECK_THROWS_AS(parse_cf_word("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cf_word("[]"), std::invalid_argument);
    CHECK(parse_fraction("5/12") == Rational(5, 12));
    CHECK(parse_fraction("-7") == Rational(-7, 1));
    CHECK(parse_fraction("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_fraction("a/b"), std::invalid_argument);
}
