#pragma once

// Homogeneous polynomials over Q in a fixed graded reverse-lexicographic order.

#include <map>
#include <string>
#include <vector>

#include "defectk/linalg.hpp"
#include "defectk/numeric.hpp"

namespace defectk {

using Exponents = std::vector<int>;

/// Strict "a comes before b" in descending grevlex: x0 > x1 > ... > x_{n-1}.
struct GrevlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

/// All monomials of degree k in nvars variables, descending grevlex.
class MonomialBasis {
public:
    MonomialBasis(int nvars, int degree);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Exponents>& monomials() const { return monomials_; }

    /// Throws std::out_of_range for a monomial not in this basis.
    std::size_t index_of(const Exponents& e) const;

private:
    int nvars_;
    int degree_;
    std::vector<Exponents> monomials_;
    std::map<Exponents, std::size_t> index_;
};

/// Shared, thread-safe cache; the returned reference lives for the whole program.
const MonomialBasis& monomial_basis(int nvars, int degree);

/// A form of fixed degree. Zero coefficients are never stored.
class GradedPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrevlexGreater>;

    GradedPoly(int nvars, int degree);

    static GradedPoly variable(int nvars, int i);
    static GradedPoly constant(int nvars, const Rational& c);
    static GradedPoly monomial(const Exponents& e, const Rational& c = 1);
    static GradedPoly linear_form(const std::vector<Rational>& coeffs);
    static GradedPoly from_vector(int nvars, int degree, const std::vector<Rational>& coords);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    /// Coordinates in monomial_basis(nvars, degree).
    std::vector<Rational> to_vector() const;

    std::string to_string() const;

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const Rational& s);

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(GradedPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const GradedPoly& a, const GradedPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const GradedPoly& o) const;

    int nvars_;
    int degree_;
    TermMap terms_;
};

GradedPoly multiply(const GradedPoly& f, const GradedPoly& g);
GradedPoly power(const GradedPoly& f, int e);

/// d f / d x_i; rejects degree-0 input.
GradedPoly partial_derivative(const GradedPoly& f, int i);

/// f with x_i = 0, as a form in the remaining nvars-1 variables (order kept).
GradedPoly substitute_zero(const GradedPoly& f, int i);

/// (f o M)(x) = f(M x): x_i is replaced by sum_j M(i,j) x_j. Rejects singular M.
GradedPoly linear_change(const GradedPoly& f, const RationalMatrix& m);

/// Projective point, stored normalised: first nonzero coordinate equals 1.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Rational> coords);
    static ProjectivePoint from_integers(const std::vector<long>& coords);

    std::size_t size() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    /// Index of the first nonzero coordinate (where the value is 1).
    std::size_t chart() const;

    /// Primitive integer representative (same projective point).
    std::vector<Integer> integer_coords() const;

    std::string to_string() const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Rational> coords_;
};

/// Value of f at the normalised representative of p.
Rational evaluate(const GradedPoly& f, const ProjectivePoint& p);

/// Value of f at an arbitrary (unnormalised) coordinate vector; rejects the zero vector.
Rational evaluate(const GradedPoly& f, const std::vector<Rational>& coords);

} // namespace defectk
