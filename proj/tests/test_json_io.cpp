#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "defectk/analysis.hpp"

using namespace defectk;

TEST_CASE("graded polynomials round trip")
{
    const auto f = plane_family(GridParams::plane(4)).f * Rational(-5, 3);
    const auto j = to_json(f);
    CHECK(j.at("nvars") == 5);
    CHECK(j.at("degree") == 4);
    CHECK(graded_poly_from_json(j) == f);
    CHECK(graded_poly_from_json(Json::parse(j.dump())) == f);
}

TEST_CASE("term layout")
{
    GradedPoly f(2, 1);
    f.add_term({1, 0}, Rational(3, 4));
    CHECK(to_json(f).at("terms").dump() == "[[[1,0],3,4]]");
}

TEST_CASE("point sets round trip")
{
    const auto pts = random_points_control(6, 4, 3);
    const auto j = to_json(pts);
    CHECK(j.size() == 6);
    CHECK(j[0].size() == 4);
    CHECK(j[0][0].size() == 2);
    CHECK(point_set_from_json(j) == pts);
    CHECK_THROWS(point_set_from_json(Json::array()));
    CHECK_THROWS(point_set_from_json(Json::parse("[[[1,0],[1,1]]]")));
}

TEST_CASE("big integers are strings")
{
    const Integer big("123456789012345678901234567890");
    Rational q(big, 11);
    q.canonicalize();
    const auto j = rational_json(q);
    CHECK(j[0].is_string());
    CHECK(rational_from_json(j) == q);
    CHECK(rational_from_json(Json::parse("[4, 6]")) == Rational(2, 3));
    CHECK_THROWS(rational_from_json(Json::parse("[1, 0]")));
}

TEST_CASE("profiles")
{
    const HilbertProfile h{1, 2, 3, 2, 1};
    CHECK(profile_from_json(to_json(h)) == h);
    CHECK_THROWS(profile_from_json(Json::parse("[1,-1]")));
}

TEST_CASE("defect reports round trip with their trace")
{
    const auto r = certify_min_nodes_p4(4, {1, 2, 3, 2, 1}, 9);
    const auto j = to_json(r);
    CHECK(j.at("trace").size() == 5);
    CHECK(j.at("trace")[0].at("rule") == "symmetry");
    CHECK(j.at("certified") == true);
    CHECK(defect_report_from_json(j) == r);
}

TEST_CASE("analyses are reproducible byte for byte")
{
    const auto a = to_json(analyze_family("plane", 4, 1)).dump();
    const auto b = to_json(analyze_family("plane", 4, 1)).dump();
    CHECK(a == b);
    const auto j = Json::parse(a);
    CHECK(j.at("scenario").at("family") == "plane");
    CHECK(j.at("report").at("defect") == 1);
}
