#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewq/rational.hpp"

using namespace skewq;

TEST_CASE("rational arithmetic is normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-1, 3) < Rational(1, 7));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow throws instead of wrapping") {
    Rational big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    // Intermediates above 64 bits that cancel are fine.
    Rational half_big(INT64_MAX / 2, 3);
    CHECK(half_big / half_big == Rational(1));
}

TEST_CASE("gaussian rational field operations") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(1, 2), Rational(-3));
    CHECK(z * (GaussianRational(1) / z) == GaussianRational(1));
    CHECK((z - z).is_zero());
    CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);
}

TEST_CASE("coefficient string round trip") {
    auto rt = [](const GaussianRational& z) { return parse_gaussian(z.str()) == z; };
    CHECK(rt(GaussianRational(0)));
    CHECK(rt(GaussianRational(7)));
    CHECK(rt(GaussianRational(Rational(-3, 4))));
    CHECK(rt(GaussianRational::i()));
    CHECK(rt(-GaussianRational::i()));
    CHECK(rt(GaussianRational(Rational(1, 2), Rational(-5, 6))));
    CHECK(rt(GaussianRational(Rational(0), Rational(9, 2))));
}

TEST_CASE("coefficient string grammar") {
    CHECK(parse_gaussian("i") == GaussianRational::i());
    CHECK(parse_gaussian("-i") == -GaussianRational::i());
    CHECK(parse_gaussian("2*i") == GaussianRational(Rational(0), Rational(2)));
    CHECK(parse_gaussian("3/4i") == GaussianRational(Rational(0), Rational(3, 4)));
    CHECK(parse_gaussian("1/2+1/3*i") == GaussianRational(Rational(1, 2), Rational(1, 3)));
    CHECK(parse_gaussian("-2-i") == GaussianRational(Rational(-2), Rational(-1)));
    CHECK(parse_gaussian(" 1 / 2 ") == GaussianRational(Rational(1, 2)));
    CHECK_THROWS_AS(parse_gaussian(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("1+2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("1+i+i"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("i+i"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("1/"), std::invalid_argument);
}
