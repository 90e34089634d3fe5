#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "defectk/linalg.hpp"

using namespace defectk;

namespace {

RationalMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, long range = 7)
{
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = Rational(static_cast<long>(rng() % static_cast<unsigned long>(2 * range + 1)) - range,
                               static_cast<long>(rng() % 3U) + 1);
            m(i, j).canonicalize();
        }
    }
    return m;
}

// Rank-deficient: product of r x k and k x c.
RationalMatrix low_rank(std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng)
{
    return multiply(random_matrix(r, k, rng), random_matrix(k, c, rng));
}

// Leibniz expansion over all permutations.
Rational leibniz(const RationalMatrix& m)
{
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        Rational term = 1;
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            term *= m(i, perm[i]);
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        total += inversions % 2 == 0 ? term : Rational(-term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

IntegerMatrix to_integer(const RationalMatrix& m)
{
    return clear_denominators(m);
}

} // namespace

TEST_CASE("rank of small fixed matrices")
{
    RationalMatrix a(3, 3);
    int v = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            a(i, j) = v++;
        }
    }
    CHECK(rank(a) == 2);
    CHECK(serial::rank(a) == 2);
    CHECK(rank(RationalMatrix(4, 0)) == 0);
    CHECK(rank(RationalMatrix(0, 4)) == 0);
    CHECK(rank(RationalMatrix::identity(5)) == 5);
}

TEST_CASE("parallel kernels agree with the serial reference")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t r = 5 + rng() % 60;
        const std::size_t c = 5 + rng() % 90;
        const std::size_t k = 1 + rng() % std::min(r, c);
        const auto m = low_rank(r, c, k, rng);
        const auto ser = serial::rref(m);
        const auto par = rref(m);
        CHECK(par.pivots == ser.pivots);
        CHECK(par.basis == ser.basis);
        CHECK(rank(m) == ser.pivots.size());
        CHECK(rank(to_integer(m)) == ser.pivots.size());
        CHECK(ser.pivots.size() <= k);
    }
}

TEST_CASE("large matrices cross the parallel threshold")
{
    std::mt19937_64 rng(11);
    const auto m = low_rank(90, 120, 40, rng);
    CHECK(rref(m).basis == serial::rref(m).basis);
    CHECK(rank(to_integer(m)) == 40);
}

TEST_CASE("determinants match the Leibniz expansion")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto m = random_matrix(n, n, rng);
        CHECK(determinant(m) == leibniz(m));
    }
    RationalMatrix sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    CHECK(determinant(sing) == 0);
}

TEST_CASE("nullspace and left kernel")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t r = 3 + rng() % 20;
        const std::size_t c = 3 + rng() % 20;
        const auto m = low_rank(r, c, 1 + rng() % std::min(r, c), rng);
        const auto rk = rank(m);
        const auto ns = nullspace(m);
        CHECK(ns.rows() == c - rk);
        CHECK(rank(ns) == ns.rows());
        if (ns.rows() > 0) {
            const auto prod = multiply(m, ns.transpose());
            CHECK(prod == RationalMatrix(r, ns.rows(), Rational(0)));
        }
        const auto mi = to_integer(m);
        const auto lk = left_kernel(mi);
        CHECK(lk.rows() == r - rk);
        for (std::size_t i = 0; i < lk.rows(); ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                Integer s = 0;
                for (std::size_t t = 0; t < r; ++t) {
                    s += lk(i, t) * mi(t, j);
                }
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("inverse")
{
    std::mt19937_64 rng(9);
    const auto m = random_matrix(6, 6, rng);
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(multiply(m, *inv) == RationalMatrix::identity(6));
    RationalMatrix z(2, 2, Rational(0));
    CHECK_FALSE(inverse(z).has_value());
}

TEST_CASE("rank over F_p never exceeds rank over Q and agrees for most large primes")
{
    std::mt19937_64 rng(13);
    const auto m = low_rank(30, 40, 17, rng);
    const auto q = rank(m);
    REQUIRE(q == 17);
    mpz_class p = 1000000;
    int agree = 0;
    for (int i = 0; i < 100; ++i) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        const auto rp = rank(m, Field::modular(static_cast<std::uint32_t>(p.get_ui())));
        CHECK(rp <= q);
        agree += rp == q ? 1 : 0;
    }
    CHECK(agree >= 95);
}

TEST_CASE("small primes may drop rank; reduction respects denominators")
{
    RationalMatrix m(2, 2);
    m(0, 0) = 3;
    m(0, 1) = 0;
    m(1, 0) = 0;
    m(1, 1) = 1;
    CHECK(rank(m, Field::modular(3)) == 1);
    CHECK(rank(m) == 2);
    RationalMatrix h(1, 1);
    h(0, 0) = Rational(1, 3);
    CHECK_FALSE(reduce_mod(h, 3).has_value());
    // unreducible input falls back to exact rank
    CHECK(rank(h, Field::modular(3)) == 1);
}
