#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defectk/poly.hpp"

using namespace defectk;

namespace {

GradedPoly x(int nv, int i) { return GradedPoly::variable(nv, i); }

} // namespace

TEST_CASE("monomial bases have binomial size and consistent indices")
{
    for (int nv = 1; nv <= 6; ++nv) {
        for (int d = 0; d <= 6; ++d) {
            const auto& b = monomial_basis(nv, d);
            CHECK(b.size() == binom(d + nv - 1, nv - 1).get_ui());
            for (std::size_t i = 0; i < b.size(); ++i) {
                CHECK(b.index_of(b[i]) == i);
                CHECK(total_degree(b[i]) == d);
            }
        }
    }
}

TEST_CASE("grevlex order")
{
    const GrevlexGreater gt;
    // x0^2 > x0 x1 > x1^2 > x0 x2 > x1 x2 > x2^2
    const std::vector<Exponents> expected{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    const auto& b = monomial_basis(3, 2);
    REQUIRE(b.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(b[i] == expected[i]);
    }
    CHECK(gt(Exponents{1, 0, 0}, Exponents{0, 0, 0}));
}

TEST_CASE("arithmetic")
{
    const int nv = 3;
    const auto f = x(nv, 0) + x(nv, 1);
    const auto sq = multiply(f, f);
    CHECK(sq.coefficient({1, 1, 0}) == 2);
    CHECK(sq.coefficient({2, 0, 0}) == 1);
    CHECK(power(f, 3).coefficient({2, 1, 0}) == 3);
    CHECK(power(f, 0) == GradedPoly::constant(nv, 1));
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(f + multiply(f, f), std::invalid_argument);
    GradedPoly g(nv, 2);
    CHECK_THROWS_AS(g.add_term({1, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("vectors round trip")
{
    const auto f = multiply(x(4, 0), x(4, 3)) * Rational(3, 7) - multiply(x(4, 2), x(4, 2));
    CHECK(GradedPoly::from_vector(4, 2, f.to_vector()) == f);
}

TEST_CASE("derivatives and substitution")
{
    const int nv = 3;
    const auto f = multiply(power(x(nv, 0), 2), x(nv, 1)) + power(x(nv, 2), 3);
    const auto fx = partial_derivative(f, 0);
    CHECK(fx == multiply(x(nv, 0), x(nv, 1)) * Rational(2));
    const auto fz = partial_derivative(f, 2);
    CHECK(fz == power(x(nv, 2), 2) * Rational(3));
    CHECK_THROWS_AS(partial_derivative(GradedPoly::constant(nv, 1), 0), std::invalid_argument);
    const auto r = substitute_zero(f, 2);
    CHECK(r.nvars() == 2);
    CHECK(r == multiply(power(x(2, 0), 2), x(2, 1)));
    // Euler: sum x_i df/dx_i = deg * f
    GradedPoly euler(nv, 3);
    for (int i = 0; i < nv; ++i) {
        euler += multiply(x(nv, i), partial_derivative(f, i));
    }
    CHECK(euler == f * Rational(3));
}

TEST_CASE("linear change of coordinates")
{
    RationalMatrix m = RationalMatrix::identity(3);
    m(0, 1) = 2;   // x0 -> x0 + 2 x1
    const auto f = multiply(x(3, 0), x(3, 2));
    const auto g = linear_change(f, m);
    CHECK(g == multiply(x(3, 0) + x(3, 1) * Rational(2), x(3, 2)));
    const auto back = linear_change(g, *inverse(m));
    CHECK(back == f);
    RationalMatrix sing(3, 3, Rational(0));
    CHECK_THROWS_AS(linear_change(f, sing), std::invalid_argument);
}

TEST_CASE("projective points normalise")
{
    const ProjectivePoint p({Rational(0), Rational(2), Rational(4, 3)});
    CHECK(p[1] == 1);
    CHECK(p[2] == Rational(2, 3));
    CHECK(p.chart() == 1);
    CHECK(p.integer_coords() == std::vector<Integer>{0, 3, 2});
    CHECK(p == ProjectivePoint::from_integers({0, -3, -2}));
    CHECK_THROWS_AS(ProjectivePoint({Rational(0), Rational(0)}), std::invalid_argument);
}

TEST_CASE("evaluation")
{
    const auto f = multiply(x(3, 0), x(3, 1)) - power(x(3, 2), 2);
    CHECK(evaluate(f, ProjectivePoint::from_integers({1, 4, 2})) == 0);
    CHECK(evaluate(f, std::vector<Rational>{2, 3, 1}) == 5);
    CHECK_THROWS_AS(evaluate(f, std::vector<Rational>{0, 0, 0}), std::invalid_argument);
}
