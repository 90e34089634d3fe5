#pragma once

// Degreewise computations with graded ideals: pieces generated by forms,
// ideals of finite point sets, restriction to a hyperplane, Gorenstein
// ancestor ideals of a socle functional, and base loci via Gotzmann persistence.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "defectk/linalg.hpp"
#include "defectk/poly.hpp"

namespace defectk {

/// h(0), ..., h(N) with h(k) = dim (S/I)_k.
using HilbertProfile = std::vector<long>;

/// Pairwise distinct normalised points of P^{nvars-1}.
class PointSet {
public:
    PointSet() = default;
    PointSet(int nvars, std::vector<ProjectivePoint> points);

    int nvars() const { return nvars_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<ProjectivePoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const ProjectivePoint& p) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    int nvars_ = 0;
    std::vector<ProjectivePoint> points_;
};

/// The degree-k part of an ideal, stored as a reduced row-echelon matrix over
/// monomial_basis(nvars, k).
class IdealPiece {
public:
    IdealPiece(int nvars, int degree);   // the zero subspace

    static IdealPiece from_rows(int nvars, int degree, const RationalMatrix& rows);
    static IdealPiece full(int nvars, int degree);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    std::size_t ambient_dim() const { return monomial_basis(nvars_, degree_).size(); }
    std::size_t dim() const { return basis_.rows(); }
    long codim() const { return static_cast<long>(ambient_dim() - dim()); }
    bool is_zero() const { return dim() == 0; }

    const RationalMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<GradedPoly> generators() const;

    bool contains(const GradedPoly& f) const;
    bool contains(const IdealPiece& other) const;

    friend bool operator==(const IdealPiece&, const IdealPiece&) = default;

private:
    int nvars_;
    int degree_;
    RationalMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Degree-k part of the ideal generated by the forms (generators above k are ignored).
IdealPiece generated_piece(const std::vector<GradedPoly>& generators, int k);

/// V * S_1.
IdealPiece next_degree(const IdealPiece& v);

/// Rows: primitive integer representatives of the points; columns: monomials of degree k.
IntegerMatrix evaluation_matrix(const PointSet& points, int k);

/// dim (S/I(points))_k, the rank of the evaluation matrix.
long points_hilbert(const PointSet& points, int k, Field field = {});

/// points_hilbert for k = 0..max_degree.
HilbertProfile points_profile(const PointSet& points, int max_degree, Field field = {});

/// I(points)_k.
IdealPiece ideal_of_points(const PointSet& points, int k);

/// Coordinates y = A x in which the linear form ell becomes the last variable.
class HyperplaneChart {
public:
    explicit HyperplaneChart(const GradedPoly& ell);

    int nvars() const { return ell_.nvars(); }
    const GradedPoly& ell() const { return ell_; }
    const RationalMatrix& forward() const { return forward_; }
    const RationalMatrix& backward() const { return backward_; }

    /// g(A^{-1} y): the same form written in chart coordinates.
    GradedPoly to_chart(const GradedPoly& g) const;

    /// A p, as a primitive integer vector.
    std::vector<Integer> to_chart(const ProjectivePoint& p) const;

private:
    GradedPoly ell_;
    RationalMatrix forward_;
    RationalMatrix backward_;
};

/// Image of I + (ell) in the coordinate ring of V(ell), one piece per input piece.
std::vector<IdealPiece> restrict_to_hyperplane(const std::vector<IdealPiece>& pieces, const GradedPoly& ell);

/// h_{I_H}(k) = h_I(k) - h_I(k-1) (k >= 1), h_{I_H}(0) = 1.
/// Throws NonGenericHyperplane if some point lies on V(ell).
HilbertProfile difference_profile(const HilbertProfile& h_points, const PointSet& points, const GradedPoly& ell);

/// Seeded draw of ell with coefficients in [1, 997] avoiding every point.
GradedPoly draw_generic_hyperplane(const PointSet& points, std::uint64_t seed, int max_attempts = 64);

/// (I(points) + (ell))/(ell) in degree k, computed from evaluations: g lies in
/// it iff its values at the points agree with those of some ell*h.
IdealPiece restricted_piece(const PointSet& points, const HyperplaneChart& chart, int k);

/// Linear functional on S_N in coordinates of monomial_basis(nvars, N).
struct Functional {
    int nvars = 1;
    int degree = 0;
    std::vector<Rational> values;

    bool is_zero() const;
};

/// Annihilator of (I_H)_N, reduced row-echelon in the dual monomial basis.
RationalMatrix restricted_annihilator(const PointSet& points, const HyperplaneChart& chart, int n_degree);

/// First row of restricted_annihilator; throws std::domain_error when (I_H)_N = S_N.
Functional socle_functional(const PointSet& points, const HyperplaneChart& chart, int n_degree);

/// Rows: monomials of S_e; columns: monomials of S_{N-e}; entry phi(m1 * m2).
RationalMatrix catalecticant(const Functional& phi, int e);

/// I'_e = {g in S_e : phi(g * S_{N-e}) = 0}; all of S_e for e > N.
IdealPiece gorenstein_ancestor(const Functional& phi, int e);

/// h_{I'}(e) for e = 0..N.
HilbertProfile ancestor_profile(const Functional& phi, Field field = {});

struct GrowthViolation {
    int k;
    long h_k;
    long h_next;
    Integer bound;
};

/// Every k >= 1 with h(k+1) > h(k)^<k>.
std::vector<GrowthViolation> macaulay_growth_audit(const HilbertProfile& profile);

struct BaseLocus {
    enum class Kind { Empty, Dim, Inconclusive };
    Kind kind = Kind::Inconclusive;
    long dim = -1;          // meaningful for Kind::Dim
    int settled_degree = -1;

    static BaseLocus empty(int at) { return {Kind::Empty, -1, at}; }
    static BaseLocus dimension(long m, int at) { return {Kind::Dim, m, at}; }
    static BaseLocus inconclusive(int at) { return {Kind::Inconclusive, -1, at}; }

    /// -1 for empty; throws InconclusiveProbe when inconclusive.
    long as_dim() const;
    std::string to_string() const;

    friend bool operator==(const BaseLocus&, const BaseLocus&) = default;
};

int default_degree_cap(int input_degree);

/// Dimension of the common zero locus of V, read off at the first degree
/// where the Hilbert function of (V) grows maximally (Gotzmann persistence).
BaseLocus base_locus_dimension(const IdealPiece& v, std::optional<int> degree_cap = std::nullopt);

/// h(k+1) < h(k) or h(k) = 0 for every k >= max(d, bpf_degree - 1) inside the profile.
bool corgreen_check(const HilbertProfile& profile, int d, int bpf_degree);

struct LemdimsResult {
    std::vector<int> d_values;   // d_{-1}, d_0, ..., d_{n-1}
    long sum = 0;
    long bound = 0;              // N + n + 1
    bool satisfied = false;
};

/// pieces[t] = I_t for t = 0..T (T > N). n is the projective dimension (nvars - 1).
LemdimsResult lemdims_check(const std::vector<IdealPiece>& pieces, int socle_degree, int n, int degree_cap = 40);

} // namespace defectk
