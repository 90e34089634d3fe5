#pragma once

// Macaulay expansions and the growth/restriction bounds derived from them.
// All arithmetic is exact (GMP); every function here is pure.

#include <string>
#include <vector>

#include "defectk/numeric.hpp"

namespace defectk {

/// c = sum_{i=1}^{d} binom(i + eps_i, i) with eps_d >= ... >= eps_1 >= -1.
/// eps is stored top-down: eps[0] = eps_d, eps[d-1] = eps_1.
struct MacaulayExpansion {
    Integer c;
    int d = 1;
    std::vector<long> eps;

    /// eps_i for 1 <= i <= d.
    long at(int i) const { return eps.at(static_cast<std::size_t>(d - i)); }

    /// sum_i binom(i + eps_i, i); equals c for a valid expansion.
    Integer reconstruct() const;

    /// Weakly decreasing, bounded below by -1.
    bool well_formed() const;

    std::string eps_string() const;

    friend bool operator==(const MacaulayExpansion&, const MacaulayExpansion&) = default;
};

/// Greedy expansion of c in base d (c >= 0, d >= 1). Throws overflow_error
/// when some eps_i exceeds the range of long.
MacaulayExpansion expand(const Integer& c, int d);

/// c^<d>: maximal codimension of V*S_1 when codim V = c in degree d.
Integer upper_growth(const Integer& c, int d);

/// c_<d>: codimension bound after restriction to a general hyperplane.
Integer hyperplane_bound(const Integer& c, int d);

struct LowerShift {
    Integer value;
    bool strict = false;   // eps_1 >= 0, so h(d-1) > value
};

/// c_{*d}; requires d >= 2.
LowerShift lower_shift(const Integer& c, int d);

/// Floor for h_I(k), 0 <= k <= d, given h_I(d) = c <= 2d + 1.
long low_degree_floor(long c, int d, int k);

/// Coefficient of t^k in prod(1 - t^{d_i}) / (1 - t)^nvars.
Integer ci_hilbert(const std::vector<int>& multidegree, int nvars, int k);

/// binom(d+n+1, n+1) - (n+1)(n+2).
Integer ci_pnd(int n, int d);

/// binom(d+n+1, n+1) - binom(d+n-1, n+1) - (3n^2+9n+4)/2.
Integer c0_value(int n, int d);

/// The eps sequence of the closed-form expansion of c0 valid for n >= 16.
MacaulayExpansion c0_closed_form(int n, int d);

/// expand(c0, d) == c0_closed_form(n, d). Requires n >= 16, d >= 5.
bool c0_expansion_identity(int n, int d);

/// Univariate polynomial with exact rational coefficients (coeffs[j] multiplies t^j).
class HilbertPolynomial {
public:
    HilbertPolynomial() = default;
    HilbertPolynomial(std::vector<Rational> coeffs, long dimension);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    long dimension() const { return dimension_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational operator()(const Rational& t) const;

    /// Checks integrality at t = 0..upto.
    bool integer_valued(long upto) const;

    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
    long dimension_ = -1;
};

/// Hilbert polynomial forced by Gotzmann persistence from degree d with h(d) = c,
/// sum_i binom(t - d + i + eps_i, eps_i) over eps_i >= 0; dimension = eps_d.
HilbertPolynomial gotzmann_polynomial(const Integer& c, int d);

} // namespace defectk
