#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "defectk/macaulay.hpp"

using namespace defectk;

namespace {

// Pascal table in 64-bit integers, independent of the library's binomials.
long long choose(long a, long b)
{
    static std::vector<std::vector<long long>> t;
    if (a < 0 || b < 0 || a < b) {
        return 0;
    }
    while (static_cast<long>(t.size()) <= a) {
        const auto n = t.size();
        std::vector<long long> row(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k) {
            row[k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        t.push_back(row);
    }
    return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

// Every weakly decreasing eps list of length d with entries >= -1 and sum <= cap.
void enumerate(int i, long top, long long sum, long long cap, std::vector<long>& eps,
               std::map<long long, std::vector<std::vector<long>>>& out)
{
    if (i == 0) {
        out[sum].push_back(eps);
        return;
    }
    for (long e = -1; e <= top; ++e) {
        const long long next = sum + choose(i + e, i);
        if (next > cap) {
            break;
        }
        eps.push_back(e);
        enumerate(i - 1, e, next, cap, eps, out);
        eps.pop_back();
    }
}

std::vector<long> eps_of(long c, int d) { return expand(Integer(c), d).eps; }

} // namespace

TEST_CASE("reference expansions")
{
    CHECK(eps_of(3, 5) == std::vector<long>{0, 0, 0, -1, -1});
    CHECK(eps_of(0, 3) == std::vector<long>{-1, -1, -1});
    CHECK(eps_of(5, 2) == std::vector<long>{1, 1});
    CHECK(expand(Integer(5), 2).at(2) == 1);
    CHECK(expand(Integer(5), 2).at(1) == 1);
}

TEST_CASE("expansion is the unique brute-force list, c <= 400, d <= 7")
{
    for (int d = 1; d <= 7; ++d) {
        std::map<long long, std::vector<std::vector<long>>> all;
        std::vector<long> eps;
        enumerate(d, 400, 0, 400, eps, all);
        for (long c = 0; c <= 400; ++c) {
            const auto& lists = all[c];
            REQUIRE(lists.size() == 1);
            const auto e = expand(Integer(c), d);
            CHECK(e.eps == lists.front());
            CHECK(e.reconstruct() == c);
            CHECK(e.well_formed());
        }
    }
}

TEST_CASE("expansion of large integers reconstructs")
{
    const Integer big("123456789012345678901234567890");
    CHECK_THROWS_AS(expand(big, 1), std::overflow_error);
    for (int d = 2; d <= 30; ++d) {
        const auto e = expand(big, d);
        CHECK(e.reconstruct() == big);
        CHECK(e.well_formed());
    }
}

TEST_CASE("derived operators on reference values")
{
    CHECK(upper_growth(Integer(7), 7) == 7);
    CHECK(upper_growth(Integer(10), 7) == 11);
    CHECK(upper_growth(Integer(15), 7) == 17);
    CHECK(upper_growth(Integer(0), 4) == 0);
    CHECK(hyperplane_bound(Integer(5), 2) == 2);
    CHECK(hyperplane_bound(Integer(3), 5) == 0);
    CHECK(hyperplane_bound(Integer(0), 3) == 0);
    const auto s1 = lower_shift(Integer(5), 2);
    CHECK(s1.value == 2);
    CHECK(s1.strict);
    const auto s2 = lower_shift(Integer(1), 3);
    CHECK(s2.value == 1);
    CHECK_FALSE(s2.strict);
    const auto s3 = lower_shift(Integer(0), 2);
    CHECK(s3.value == 0);
    CHECK_FALSE(s3.strict);
    CHECK_THROWS_AS(lower_shift(Integer(3), 1), std::invalid_argument);
}

TEST_CASE("derived operators on independently enumerated expansions")
{
    for (int d = 1; d <= 8; ++d) {
        std::map<long long, std::vector<std::vector<long>>> all;
        std::vector<long> eps;
        enumerate(d, 200, 0, 200, eps, all);
        for (long c = 0; c <= 200; ++c) {
            const auto& e = all[c].front();
            long long up = 0;
            long long down = 0;
            for (int i = 1; i <= d; ++i) {
                const long ei = e[static_cast<std::size_t>(d - i)];
                up += choose(i + ei + 1, i + 1);
                down += choose(i + ei - 1, i);
            }
            CHECK(upper_growth(Integer(c), d) == Integer(static_cast<long>(up)));
            CHECK(hyperplane_bound(Integer(c), d) == Integer(static_cast<long>(down)));
        }
    }
}

TEST_CASE("hyperplane bound against lex-segment restriction")
{
    // Degree-d monomials in nv variables ordered lex; the c smallest span the
    // complement of the lex segment. Restricting by the last variable keeps
    // those free of it.
    constexpr int nv = 7;
    for (int d = 1; d <= 4; ++d) {
        std::vector<std::vector<int>> mons;
        std::vector<int> e(nv, 0);
        const std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == nv - 1) {
                e[i] = left;
                mons.push_back(e);
                return;
            }
            for (int a = left; a >= 0; --a) {
                e[i] = a;
                rec(i + 1, left - a);
            }
        };
        rec(0, d);
        // rec emits lex-descending; reverse for ascending
        std::reverse(mons.begin(), mons.end());
        const long limit = std::min<long>(static_cast<long>(mons.size()), 120);
        for (long c = 0; c <= limit; ++c) {
            long free = 0;
            for (long j = 0; j < c; ++j) {
                free += mons[static_cast<std::size_t>(j)][nv - 1] == 0 ? 1 : 0;
            }
            CHECK(hyperplane_bound(Integer(c), d) == free);
        }
    }
}

TEST_CASE("operators are monotone in c")
{
    for (int d = 2; d <= 9; ++d) {
        for (long c = 0; c < 600; ++c) {
            CHECK(upper_growth(Integer(c), d) <= upper_growth(Integer(c + 1), d));
            CHECK(hyperplane_bound(Integer(c), d) <= hyperplane_bound(Integer(c + 1), d));
            CHECK(lower_shift(Integer(c), d).value <= lower_shift(Integer(c + 1), d).value);
        }
    }
}

TEST_CASE("low-degree floor")
{
    CHECK(low_degree_floor(4, 6, 2) == 3);
    CHECK(low_degree_floor(8, 6, 3) == 5);
    CHECK(low_degree_floor(13, 6, 4) == 9);
    CHECK_THROWS_AS(low_degree_floor(14, 6, 4), std::invalid_argument);
    CHECK_THROWS_AS(low_degree_floor(4, 6, 7), std::invalid_argument);
}

TEST_CASE("complete intersection series")
{
    CHECK(ci_hilbert({}, 5, 3) == 35);
    CHECK(ci_hilbert({1, 1, 1, 4, 4, 4}, 7, 5) == 44);
    CHECK(ci_hilbert({1, 2, 5, 6}, 4, 4) == 9);
    CHECK_THROWS_AS(ci_hilbert({1, 1, 1}, 2, 1), std::invalid_argument);
    CHECK(ci_pnd(2, 5) == 44);
    CHECK(ci_pnd(2, 3) == 8);
    CHECK(ci_pnd(3, 4) == 50);
}

TEST_CASE("Artinian complete intersections are symmetric")
{
    const std::vector<std::vector<int>> shapes{{1, 1, 1, 3, 3}, {1, 2, 5, 6}, {2, 2, 3}, {3, 3}, {2, 4, 4, 5}};
    for (const auto& m : shapes) {
        int top = 0;
        for (int x : m) {
            top += x - 1;
        }
        for (int k = 0; k <= top; ++k) {
            CHECK(ci_hilbert(m, static_cast<int>(m.size()), k) ==
                  ci_hilbert(m, static_cast<int>(m.size()), top - k));
        }
        CHECK(ci_hilbert(m, static_cast<int>(m.size()), top + 1) == 0);
    }
}

TEST_CASE("CI of type (1^{n+1}, (d-1)^{n+1}) in degree d matches p_{n,d}")
{
    for (int n = 1; n <= 3; ++n) {
        for (int d = 3; d <= 10; ++d) {
            std::vector<int> m(static_cast<std::size_t>(n + 1), 1);
            m.insert(m.end(), static_cast<std::size_t>(n + 1), d - 1);
            CHECK(ci_hilbert(m, 2 * n + 3, d) == ci_pnd(n, d));
        }
    }
}

TEST_CASE("c0 identity")
{
    CHECK(c0_expansion_identity(16, 10));
    CHECK(c0_expansion_identity(20, 12));
    CHECK(c0_expansion_identity(16, 5));
    CHECK_THROWS_AS(c0_expansion_identity(15, 10), std::invalid_argument);
    // closed form against the raw value
    const auto e = c0_closed_form(18, 9);
    CHECK(e.reconstruct() == c0_value(18, 9));
}

TEST_CASE("Gotzmann polynomials")
{
    const auto p = gotzmann_polynomial(Integer(3), 1);
    CHECK(p.dimension() == 2);
    for (long t = 0; t < 10; ++t) {
        CHECK(p(Rational(t)) == Rational(static_cast<long>(choose(t + 2, 2))));
    }
    const auto z = gotzmann_polynomial(Integer(0), 3);
    CHECK(z.is_zero());
    CHECK(z.dimension() == -1);
    const auto line = gotzmann_polynomial(Integer(3), 2);
    CHECK(line.dimension() == 1);
    for (long t = 0; t < 10; ++t) {
        CHECK(line(Rational(t)) == Rational(t + 1));
    }
    for (int d = 1; d <= 6; ++d) {
        for (long c = 0; c <= 120; ++c) {
            const auto g = gotzmann_polynomial(Integer(c), d);
            CHECK(g(Rational(d)) == c);
            CHECK(g(Rational(d + 1)) == upper_growth(Integer(c), d));
            CHECK(g.integer_valued(20));
        }
    }
}
