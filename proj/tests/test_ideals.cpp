#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "defectk/errors.hpp"
#include "defectk/ideals.hpp"
#include "defectk/macaulay.hpp"

using namespace defectk;

namespace {

GradedPoly x(int nv, int i) { return GradedPoly::variable(nv, i); }

PointSet grid9()
{
    std::vector<ProjectivePoint> pts;
    for (long a = 1; a <= 3; ++a) {
        for (long b = 1; b <= 3; ++b) {
            pts.push_back(ProjectivePoint::from_integers({0, 0, a, b, 1}));
        }
    }
    return PointSet(5, pts);
}

GradedPoly random_form(int nv, int deg, std::mt19937_64& rng)
{
    GradedPoly f(nv, deg);
    for (const auto& m : monomial_basis(nv, deg).monomials()) {
        f.add_term(m, Rational(static_cast<long>(rng() % 19U) - 9));
    }
    return f;
}

} // namespace

TEST_CASE("generated pieces")
{
    const auto p = generated_piece({x(5, 0), x(5, 1)}, 1);
    CHECK(p.dim() == 2);
    CHECK(p.codim() == 3);
    const auto q = generated_piece({multiply(x(3, 0), x(3, 0))}, 3);
    CHECK(q.dim() == 3);
    const auto a = multiply(x(4, 0), x(4, 1)) - multiply(x(4, 2), x(4, 3));
    const auto b = multiply(x(4, 0), x(4, 0)) + multiply(x(4, 1), x(4, 1)) - multiply(x(4, 2), x(4, 2));
    const auto ci = generated_piece({a, b}, 4);
    CHECK(ci.codim() == 16);
    CHECK(ci.codim() == ci_hilbert({2, 2}, 4, 4));
    CHECK(generated_piece({x(3, 0)}, 0).is_zero());
}

TEST_CASE("pieces are canonical")
{
    const auto p = generated_piece({x(3, 0) + x(3, 1), x(3, 0) - x(3, 1)}, 1);
    const auto q = generated_piece({x(3, 0), x(3, 1)}, 1);
    CHECK(p == q);
    CHECK(p.contains(x(3, 0) * Rational(5)));
    CHECK_FALSE(p.contains(x(3, 2)));
    CHECK(IdealPiece::full(3, 2).contains(generated_piece({x(3, 0)}, 2)));
    CHECK_FALSE(generated_piece({x(3, 0)}, 2).contains(IdealPiece::full(3, 2)));
}

TEST_CASE("next degree")
{
    const auto p = next_degree(generated_piece({x(4, 0)}, 1));
    CHECK(p == generated_piece({x(4, 0)}, 2));
    CHECK(p.dim() == 4);
}

TEST_CASE("points Hilbert function")
{
    const PointSet one(5, {ProjectivePoint::from_integers({1, 2, 3, 4, 5})});
    for (int k = 0; k < 5; ++k) {
        CHECK(points_hilbert(one, k) == 1);
    }
    const auto g = grid9();
    // a (3,3) complete intersection in a plane: 1, 3, 6, 8, 9
    CHECK(points_profile(g, 6) == HilbertProfile{1, 3, 6, 8, 9, 9, 9});
    CHECK(points_hilbert(g, 3) == 8);
    CHECK(points_hilbert(g, 4) == 9);
    CHECK(points_hilbert(g, 3, Field::modular(1000003)) == 8);
    CHECK_THROWS_AS(points_hilbert(PointSet(5, {}), 2), std::invalid_argument);
    CHECK(ideal_of_points(g, 3).codim() == 8);
}

TEST_CASE("point sets reject duplicates and mixed dimensions")
{
    CHECK_THROWS_AS(PointSet(3, {ProjectivePoint::from_integers({1, 2, 3}), ProjectivePoint::from_integers({2, 4, 6})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PointSet(3, {ProjectivePoint::from_integers({1, 2})}), std::invalid_argument);
}

TEST_CASE("points Hilbert function is nondecreasing and saturates")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ProjectivePoint> pts;
        const int count = 2 + static_cast<int>(rng() % 9);
        while (static_cast<int>(pts.size()) < count) {
            ProjectivePoint p = ProjectivePoint::from_integers({1, static_cast<long>(rng() % 5), static_cast<long>(rng() % 5)});
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
                pts.push_back(p);
            }
        }
        const PointSet s(3, pts);
        const auto h = points_profile(s, count);
        for (std::size_t k = 1; k < h.size(); ++k) {
            CHECK(h[k] >= h[k - 1]);
        }
        CHECK(h[static_cast<std::size_t>(count - 1)] == count);
        CHECK(macaulay_growth_audit(h).empty());
    }
}

TEST_CASE("restriction to a hyperplane")
{
    const auto r = restrict_to_hyperplane({generated_piece({x(5, 0)}, 1)}, x(5, 4));
    REQUIRE(r.size() == 1);
    CHECK(r[0] == generated_piece({x(4, 0)}, 1));
    const auto z = restrict_to_hyperplane({generated_piece({x(5, 4)}, 1)}, x(5, 4));
    CHECK(z[0].is_zero());
    CHECK_THROWS_AS(HyperplaneChart(GradedPoly(5, 1)), std::invalid_argument);
}

TEST_CASE("difference profile")
{
    const auto g = grid9();
    const auto ell = GradedPoly::linear_form({1, 1, 1, 7, 13});
    const auto h = points_profile(g, 6);
    const auto d = difference_profile(h, g, ell);
    long running = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        CHECK(d[k] >= 0);
        running += d[k];
        CHECK(running == h[k]);
    }
    const PointSet one(5, {ProjectivePoint::from_integers({1, 2, 3, 4, 5})});
    CHECK(difference_profile(points_profile(one, 3), one, ell) == HilbertProfile{1, 0, 0, 0});
    const auto bad = GradedPoly::linear_form({0, 0, 1, 0, -1});
    CHECK_THROWS_AS(difference_profile(h, g, bad), NonGenericHyperplane);
}

TEST_CASE("dual restriction agrees with restricting the point ideal")
{
    const auto g = grid9();
    const auto ell = GradedPoly::linear_form({3, 1, 4, 1, 5});
    const HyperplaneChart chart(ell);
    for (int k = 0; k <= 5; ++k) {
        const auto via_ideal = restrict_to_hyperplane({ideal_of_points(g, k)}, ell)[0];
        // the chart reorders coordinates; compare in chart coordinates
        RationalMatrix rows(0, monomial_basis(4, k).size());
        for (const auto& f : ideal_of_points(g, k).generators()) {
            rows.append_row(substitute_zero(chart.to_chart(f), 4).to_vector());
        }
        const auto expected = IdealPiece::from_rows(4, k, rows);
        CHECK(restricted_piece(g, chart, k) == expected);
        CHECK(via_ideal.codim() == expected.codim());
    }
}

TEST_CASE("generic hyperplanes are reproducible")
{
    const auto g = grid9();
    CHECK(draw_generic_hyperplane(g, 42) == draw_generic_hyperplane(g, 42));
    const auto ell = draw_generic_hyperplane(g, 42);
    for (const auto& p : g) {
        CHECK(evaluate(ell, p) != 0);
    }
}

TEST_CASE("Gorenstein ancestor of a quadric")
{
    // nvars 2, N = 2, phi = coefficient of x0 x1
    Functional phi{2, 2, {0, 1, 0}};
    CHECK(ancestor_profile(phi) == HilbertProfile{1, 2, 1});
    CHECK(gorenstein_ancestor(phi, 0).is_zero());
    CHECK(gorenstein_ancestor(phi, 1).is_zero());
    CHECK(gorenstein_ancestor(phi, 2).codim() == 1);
    CHECK(gorenstein_ancestor(phi, 3) == IdealPiece::full(2, 3));
    CHECK_THROWS_AS(gorenstein_ancestor(Functional{2, 2, {0, 0, 0}}, 1), std::invalid_argument);
}

TEST_CASE("ancestor profiles are symmetric for random functionals")
{
    std::mt19937_64 rng(23);
    const auto size = monomial_basis(4, 6).size();
    for (int trial = 0; trial < 50; ++trial) {
        Functional phi{4, 6, std::vector<Rational>(size)};
        const auto support = 1 + rng() % 6;
        for (std::size_t s = 0; s < support; ++s) {
            phi.values[rng() % size] = Rational(static_cast<long>(rng() % 11U) + 1);
        }
        const auto h = ancestor_profile(phi);
        // full catalecticant ranks, without the symmetric shortcut
        for (int e = 0; e <= 6; ++e) {
            CHECK(rank(catalecticant(phi, e)) == rank(catalecticant(phi, 6 - e)));
            CHECK(h[static_cast<std::size_t>(e)] == static_cast<long>(rank(catalecticant(phi, e))));
            CHECK(gorenstein_ancestor(phi, e).codim() == h[static_cast<std::size_t>(e)]);
        }
    }
}

TEST_CASE("ancestor of the grid contains the restricted ideal")
{
    const auto g = grid9();
    const auto ell = GradedPoly::linear_form({1, 1, 1, 7, 13});
    const HyperplaneChart chart(ell);
    const auto phi = socle_functional(g, chart, 4);
    CHECK(ancestor_profile(phi) == HilbertProfile{1, 2, 3, 2, 1});
    for (int e = 0; e <= 5; ++e) {
        CHECK(gorenstein_ancestor(phi, e).contains(restricted_piece(g, chart, e)));
    }
    // past the top degree of I_H, (I_H)_N is everything
    CHECK_THROWS_AS(socle_functional(g, chart, 5), std::domain_error);
}

TEST_CASE("growth audit")
{
    const auto v1 = macaulay_growth_audit({1, 3, 7});
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].k == 1);
    CHECK(v1[0].bound == 6);
    const auto v2 = macaulay_growth_audit({1, 2, 4});
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].k + 1 == 2);
    CHECK(v2[0].h_next == 4);
    CHECK(v2[0].bound == 3);
    CHECK(macaulay_growth_audit({1, 1, 1, 1, 1, 1}).empty());
    CHECK(macaulay_growth_audit({1, 3, 6, 10, 15}).empty());
}

TEST_CASE("base loci of reference pieces")
{
    const auto lin = base_locus_dimension(generated_piece({x(5, 0), x(5, 1)}, 1));
    CHECK(lin == BaseLocus::dimension(2, 1));
    CHECK(base_locus_dimension(IdealPiece::full(4, 2)).kind == BaseLocus::Kind::Empty);
    const auto q1 = multiply(x(4, 0), x(4, 1)) - multiply(x(4, 2), x(4, 3));
    const auto q2 = multiply(x(4, 0), x(4, 0)) + multiply(x(4, 1), x(4, 1)) - multiply(x(4, 2), x(4, 2)) -
                    multiply(x(4, 3), x(4, 3));
    const auto curve = base_locus_dimension(generated_piece({q1, q2}, 2));
    CHECK(curve.kind == BaseLocus::Kind::Dim);
    CHECK(curve.dim == 1);
    CHECK_THROWS_AS(base_locus_dimension(IdealPiece(3, 2)), std::invalid_argument);
}

TEST_CASE("base loci of linear subspaces")
{
    for (int m = 0; m <= 2; ++m) {
        std::vector<GradedPoly> gens;
        for (int i = 0; i < 4 - m; ++i) {
            gens.push_back(x(5, i));
        }
        for (int e = 1; e <= 3; ++e) {
            const auto b = base_locus_dimension(generated_piece(gens, e));
            CHECK(b.kind == BaseLocus::Kind::Dim);
            CHECK(b.dim == m);
        }
    }
}

TEST_CASE("general quadrics in P^3 cut the expected dimension")
{
    std::mt19937_64 rng(29);
    for (int r = 1; r <= 4; ++r) {
        std::vector<GradedPoly> gens;
        for (int i = 0; i < r; ++i) {
            gens.push_back(random_form(4, 2, rng));
        }
        const auto b = base_locus_dimension(generated_piece(gens, 2));
        if (r == 4) {
            CHECK(b.kind == BaseLocus::Kind::Empty);
        } else {
            CHECK(b.kind == BaseLocus::Kind::Dim);
            CHECK(b.dim == 3 - r);
        }
    }
}

TEST_CASE("Hilbert function of the persistence loop matches direct pieces")
{
    // h_J(k) of J = (two quadrics) computed directly against ci_hilbert
    const auto q1 = multiply(x(4, 0), x(4, 1)) - multiply(x(4, 2), x(4, 3));
    const auto q2 = multiply(x(4, 0), x(4, 2)) + multiply(x(4, 1), x(4, 3));
    for (int k = 2; k <= 7; ++k) {
        CHECK(generated_piece({q1, q2}, k).codim() == ci_hilbert({2, 2}, 4, k));
    }
}

TEST_CASE("cap yields Inconclusive")
{
    const auto b = base_locus_dimension(generated_piece({x(3, 0)}, 1), 1);
    CHECK(b.kind == BaseLocus::Kind::Inconclusive);
    CHECK_THROWS_AS(b.as_dim(), InconclusiveProbe);
}

TEST_CASE("strict decrease check")
{
    CHECK(corgreen_check({1, 2, 3, 2, 1}, 2, 3));
    CHECK(corgreen_check({1, 2, 0, 0, 0}, 1, 1));
    CHECK_FALSE(corgreen_check({1, 2, 3, 3, 1}, 2, 3));
    CHECK_FALSE(corgreen_check({1, 3, 2, 2, 1}, 2, 2));
}

namespace {

std::vector<IdealPiece> monomial_ci(const std::vector<int>& degrees, int top)
{
    const int nv = static_cast<int>(degrees.size());
    std::vector<GradedPoly> gens;
    for (int i = 0; i < nv; ++i) {
        gens.push_back(power(x(nv, i), degrees[static_cast<std::size_t>(i)]));
    }
    std::vector<IdealPiece> out;
    for (int t = 0; t <= top; ++t) {
        out.push_back(generated_piece(gens, t));
    }
    return out;
}

} // namespace

TEST_CASE("lemdims equality cases")
{
    const auto a = lemdims_check(monomial_ci({1, 1, 1, 3, 3}, 5), 4, 4);
    CHECK(a.d_values == std::vector<int>{3, 3, 1, 1, 1});
    CHECK(a.sum == 9);
    CHECK(a.bound == 9);
    CHECK(a.satisfied);
    const auto b = lemdims_check(monomial_ci({1, 2, 5, 6}, 11), 10, 3);
    CHECK(b.d_values == std::vector<int>{6, 5, 2, 1});
    CHECK(b.sum == 14);
    CHECK(b.bound == 14);
    const auto c = lemdims_check(monomial_ci({1, 3}, 3), 2, 1);
    CHECK(c.d_values[1] == 1);
    CHECK(c.sum >= 3);
    CHECK_THROWS_AS(lemdims_check(monomial_ci({1, 2, 5, 6}, 11), 10, 3, 3), InconclusiveProbe);
}
