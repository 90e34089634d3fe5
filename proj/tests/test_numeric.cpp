#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defectk/numeric.hpp"

using namespace defectk;

TEST_CASE("binomials vanish outside the triangle")
{
    CHECK(binom(5, 2) == 10);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(4, -1) == 0);
    CHECK(binom(-1, -1) == 0);
    CHECK(binom(100, 50) == Integer("100891344545564193334812497256"));
    CHECK(binom(Integer(7), 3) == 35);
}

TEST_CASE("Pascal rule over a block")
{
    for (long a = 1; a < 40; ++a) {
        for (long b = 1; b <= a; ++b) {
            CHECK(binom(a, b) == binom(a - 1, b) + binom(a - 1, b - 1));
        }
    }
}

TEST_CASE("prime field arithmetic")
{
    const ModP a(5, 11);
    const ModP b(9, 11);
    CHECK((a + b).value() == 3);
    CHECK((a - b).value() == 7);
    CHECK((a * b).value() == 1);
    CHECK(ModP(3, 11).inverse().value() == 4);
    CHECK(ModP(-1, 11).value() == 10);
    CHECK(ModP::from_rational(Rational(1, 2), 11).value() == 6);
    CHECK(ModP::from_rational(Rational(-3, 4), 11).value() == 2);
    CHECK_THROWS_AS(ModP::from_rational(Rational(1, 11), 11), std::domain_error);
    CHECK_THROWS_AS(ModP(0, 11).inverse(), std::domain_error);
    CHECK_THROWS_AS(ModP(1, 11) + ModP(1, 13), std::logic_error);
}

TEST_CASE("inverse by brute force for a mid-size prime")
{
    const std::uint32_t p = 1009;
    for (std::uint32_t v = 1; v < p; v += 37) {
        const ModP x(v, p);
        CHECK((x * x.inverse()).value() == 1);
    }
}

TEST_CASE("field specs")
{
    CHECK(parse_field("qp").is_rational());
    CHECK(parse_field("q").is_rational());
    CHECK(parse_field("fp=13").prime == 13);
    CHECK(parse_field("fp=2147483647").prime == 2147483647U);
    CHECK(parse_field("fp=13").name() == "fp=13");
    CHECK(Field::rationals().name() == "q");
    CHECK_THROWS_AS(parse_field("fp=12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("fp=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("reals"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("fp="), std::invalid_argument);
}

TEST_CASE("primality")
{
    CHECK(is_probable_prime(2));
    CHECK(is_probable_prime(1000003));
    CHECK_FALSE(is_probable_prime(1));
    CHECK_FALSE(is_probable_prime(1000001));
}
