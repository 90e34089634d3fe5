#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defectk/errors.hpp"
#include "defectk/json_io.hpp"

using namespace defectk;

TEST_CASE("plane family")
{
    const auto x4 = plane_family(GridParams::plane(4));
    CHECK(x4.nodes.size() == 9);
    CHECK(x4.audit.size() == 9);
    for (const auto& rec : x4.audit) {
        CHECK(rec.node);
    }
    CHECK(x4.f.degree() == 4);
    CHECK(plane_family(GridParams::plane(3)).nodes.size() == 4);
    CHECK(plane_family({4, {2, 5, 7}, {-1, 0, 3}}).nodes.size() == 9);
    CHECK_THROWS_AS(plane_family({4, {1, 1, 2}, {1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(plane_family({4, {1, 2}, {1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(plane_family(GridParams::plane(2)), std::invalid_argument);
}

TEST_CASE("double solid family")
{
    const auto s2 = double_solid_family(GridParams::double_solid(2));
    CHECK(s2.nodes.size() == 6);
    CHECK(s2.d == 2);
    CHECK(s2.f.degree() == 4);
    CHECK(double_solid_family(GridParams::double_solid(3)).nodes.size() == 15);
    CHECK_THROWS_AS(double_solid_family({2, {1, 2, 3}, {1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("high-dimensional family")
{
    const auto h = ci_family_highdim(HighdimParams::grid(2, 3));
    CHECK(h.nvars == 7);
    CHECK(h.nodes.size() == 8);
    CHECK(tangent_codim(h.nodes, 3) == ci_pnd(2, 3));
    const auto h1 = ci_family_highdim(HighdimParams::grid(1, 4));
    const auto p = plane_family(GridParams::plane(4));
    CHECK(h1.f == p.f);
    CHECK(h1.nodes == p.nodes);
    CHECK_THROWS_AS(ci_family_highdim(HighdimParams::grid(2, 4), {}, 100), std::length_error);
    CHECK_THROWS_AS(ci_family_highdim(HighdimParams::grid(0, 4)), std::invalid_argument);
}

TEST_CASE("random control points")
{
    const auto a = random_points_control(8, 5, 1);
    CHECK(a.size() == 8);
    CHECK(a == random_points_control(8, 5, 1));
    CHECK_FALSE(a == random_points_control(8, 5, 2));
    CHECK_THROWS_AS(random_points_control(0, 5, 1), std::invalid_argument);
}

TEST_CASE("random nine points are not a complete intersection")
{
    int zero = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        zero += defect(random_points_control(9, 5, seed), 3).defect == 0 ? 1 : 0;
    }
    CHECK(zero == 100);
}

TEST_CASE("constructors are deterministic")
{
    const auto a = to_json(plane_family(GridParams::plane(5)).f).dump();
    const auto b = to_json(plane_family(GridParams::plane(5)).f).dump();
    CHECK(a == b);
    const auto c = to_json(double_solid_family(GridParams::double_solid(3)).nodes).dump();
    const auto d = to_json(double_solid_family(GridParams::double_solid(3)).nodes).dump();
    CHECK(c == d);
}

TEST_CASE("finite-field probe")
{
    const auto p = plane_family(GridParams::plane(3));
    const auto clean = probe_singular_points(p.f, p.nodes, 11);
    CHECK_FALSE(clean.skipped);
    CHECK(clean.points_checked == (161051U - 1U) / 10U);
    CHECK(clean.undeclared.empty());
    CHECK(clean.singular_found == 4);

    // without the pure powers, x0*A + x1*B is also singular along x2 = x3 = x4 = 0
    const auto v = [](int i) { return GradedPoly::variable(5, i); };
    const auto A = multiply(v(2) - v(4), v(2) - v(4) * Rational(2));
    const auto B = multiply(v(3) - v(4), v(3) - v(4) * Rational(2));
    const auto bare = multiply(v(0), A) + multiply(v(1), B);
    const auto dirty = probe_singular_points(bare, p.nodes, 11);
    CHECK_FALSE(dirty.undeclared.empty());

    const auto big = probe_singular_points(p.f, p.nodes, 11, 1000);
    CHECK(big.skipped);
}
