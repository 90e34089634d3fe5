#include "defectk/ideals.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "defectk/errors.hpp"
#include "defectk/macaulay.hpp"

namespace defectk {

namespace {

// Values of every monomial of `basis` at an integer vector.
std::vector<Integer> monomial_values(const MonomialBasis& basis, const std::vector<Integer>& pt)
{
    const int top = basis.degree();
    std::vector<std::vector<Integer>> pw(pt.size());
    for (std::size_t i = 0; i < pt.size(); ++i) {
        pw[i].reserve(static_cast<std::size_t>(top) + 1);
        pw[i].emplace_back(1);
        for (int k = 1; k <= top; ++k) {
            pw[i].push_back(pw[i].back() * pt[i]);
        }
    }
    std::vector<Integer> out(basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) {
        Integer v = 1;
        const auto& e = basis[m];
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                v *= pw[i][static_cast<std::size_t>(e[i])];
            }
        }
        out[m] = std::move(v);
    }
    return out;
}

RationalMatrix to_rational(const IntegerMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = Rational(m(r, c));
        }
    }
    return out;
}

std::vector<Integer> primitive(const std::vector<Rational>& v)
{
    Integer l = 1;
    for (const auto& q : v) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& q : v) {
        Integer s = l;
        mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
        out.push_back(s * q.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g > 1) {
        for (auto& x : out) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(int nvars, std::vector<ProjectivePoint> points) : nvars_(nvars), points_(std::move(points))
{
    if (nvars < 1) {
        throw std::invalid_argument("PointSet: nvars must be positive");
    }
    std::set<ProjectivePoint> seen;
    for (const auto& p : points_) {
        if (p.size() != static_cast<std::size_t>(nvars)) {
            throw std::invalid_argument("PointSet: point " + p.to_string() + " has wrong dimension");
        }
        if (!seen.insert(p).second) {
            throw std::invalid_argument("PointSet: duplicate point " + p.to_string());
        }
    }
}

bool PointSet::contains(const ProjectivePoint& p) const
{
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

// -------------------------------------------------------------- IdealPiece

IdealPiece::IdealPiece(int nvars, int degree)
    : nvars_(nvars), degree_(degree), basis_(0, monomial_basis(nvars, degree).size())
{
}

IdealPiece IdealPiece::from_rows(int nvars, int degree, const RationalMatrix& rows)
{
    IdealPiece out(nvars, degree);
    if (rows.rows() == 0) {
        return out;
    }
    if (rows.cols() != out.ambient_dim()) {
        throw std::invalid_argument("IdealPiece: row width does not match monomial basis");
    }
    auto ech = rref(rows);
    out.basis_ = std::move(ech.basis);
    out.pivots_ = std::move(ech.pivots);
    return out;
}

IdealPiece IdealPiece::full(int nvars, int degree)
{
    const auto n = monomial_basis(nvars, degree).size();
    return from_rows(nvars, degree, RationalMatrix::identity(n));
}

std::vector<GradedPoly> IdealPiece::generators() const
{
    std::vector<GradedPoly> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        out.push_back(GradedPoly::from_vector(nvars_, degree_, basis_.row(r)));
    }
    return out;
}

bool IdealPiece::contains(const GradedPoly& f) const
{
    if (f.nvars() != nvars_ || f.degree() != degree_) {
        throw std::invalid_argument("IdealPiece::contains: form of wrong shape");
    }
    // Reduce against the RREF rows; membership iff the residue vanishes.
    auto v = f.to_vector();
    for (std::size_t r = 0; r < dim(); ++r) {
        const Rational c = v[pivots_[r]];
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (basis_(r, j) != 0) {
                v[j] -= c * basis_(r, j);
            }
        }
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool IdealPiece::contains(const IdealPiece& other) const
{
    if (other.nvars_ != nvars_ || other.degree_ != degree_) {
        throw std::invalid_argument("IdealPiece::contains: pieces of different shape");
    }
    if (other.dim() > dim()) {
        return false;
    }
    if (other.is_zero() || dim() == ambient_dim()) {
        return true;
    }
    // other lies in this piece iff it is orthogonal to the complement of its rows
    const RationalMatrix perp = nullspace(basis_);
    for (std::size_t r = 0; r < other.dim(); ++r) {
        for (std::size_t q = 0; q < perp.rows(); ++q) {
            Rational dot = 0;
            for (std::size_t c = 0; c < ambient_dim(); ++c) {
                if (other.basis_(r, c) != 0 && perp(q, c) != 0) {
                    dot += other.basis_(r, c) * perp(q, c);
                }
            }
            if (dot != 0) {
                return false;
            }
        }
    }
    return true;
}

IdealPiece generated_piece(const std::vector<GradedPoly>& generators, int k)
{
    if (generators.empty()) {
        throw std::invalid_argument("generated_piece: no generators");
    }
    const int nvars = generators.front().nvars();
    RationalMatrix rows(0, monomial_basis(nvars, k).size());
    for (const auto& g : generators) {
        if (g.nvars() != nvars) {
            throw std::invalid_argument("generated_piece: generators in different rings");
        }
        if (g.degree() > k || g.is_zero()) {
            continue;
        }
        const auto& shifts = monomial_basis(nvars, k - g.degree());
        for (const auto& m : shifts.monomials()) {
            rows.append_row(multiply(g, GradedPoly::monomial(m)).to_vector());
        }
    }
    return IdealPiece::from_rows(nvars, k, rows);
}

IdealPiece next_degree(const IdealPiece& v)
{
    const int n = v.nvars();
    const auto& src = monomial_basis(n, v.degree());
    const auto& dst = monomial_basis(n, v.degree() + 1);
    // shift[m][i] = index of x_i * m in the next degree
    std::vector<std::vector<std::size_t>> shift(src.size(), std::vector<std::size_t>(static_cast<std::size_t>(n)));
    for (std::size_t m = 0; m < src.size(); ++m) {
        Exponents e = src[m];
        for (int i = 0; i < n; ++i) {
            e[static_cast<std::size_t>(i)] += 1;
            shift[m][static_cast<std::size_t>(i)] = dst.index_of(e);
            e[static_cast<std::size_t>(i)] -= 1;
        }
    }
    const std::size_t count = v.dim() * static_cast<std::size_t>(n);
    RationalMatrix rows(count, dst.size());
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for if (count * dst.size() > 4096)
    for (std::ptrdiff_t si = 0; si < total; ++si) {
        const auto r = static_cast<std::size_t>(si) / static_cast<std::size_t>(n);
        const auto i = static_cast<std::size_t>(si) % static_cast<std::size_t>(n);
        for (std::size_t m = 0; m < src.size(); ++m) {
            if (v.basis()(r, m) != 0) {
                rows(static_cast<std::size_t>(si), shift[m][i]) = v.basis()(r, m);
            }
        }
    }
    return IdealPiece::from_rows(n, v.degree() + 1, rows);
}

// ------------------------------------------------------------ point ideals

IntegerMatrix evaluation_matrix(const PointSet& points, int k)
{
    const auto& basis = monomial_basis(points.nvars(), k);
    IntegerMatrix out(points.size(), basis.size());
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t si = 0; si < n; ++si) {
        const auto r = static_cast<std::size_t>(si);
        const auto values = monomial_values(basis, points[r].integer_coords());
        for (std::size_t c = 0; c < values.size(); ++c) {
            out(r, c) = values[c];
        }
    }
    return out;
}

long points_hilbert(const PointSet& points, int k, Field field)
{
    if (points.empty()) {
        throw std::invalid_argument("points_hilbert: empty point set");
    }
    if (k < 0) {
        return 0;
    }
    const auto e = evaluation_matrix(points, k);
    if (field.is_rational()) {
        return static_cast<long>(rank(e));
    }
    return static_cast<long>(rank(to_rational(e), field));
}

HilbertProfile points_profile(const PointSet& points, int max_degree, Field field)
{
    HilbertProfile h;
    for (int k = 0; k <= max_degree; ++k) {
        // saturates at #points and stays there
        if (!h.empty() && h.back() == static_cast<long>(points.size())) {
            h.push_back(h.back());
            continue;
        }
        h.push_back(points_hilbert(points, k, field));
    }
    return h;
}

IdealPiece ideal_of_points(const PointSet& points, int k)
{
    if (points.empty()) {
        throw std::invalid_argument("ideal_of_points: empty point set");
    }
    return IdealPiece::from_rows(points.nvars(), k, nullspace(to_rational(evaluation_matrix(points, k))));
}

// ------------------------------------------------------------- hyperplanes

HyperplaneChart::HyperplaneChart(const GradedPoly& ell) : ell_(ell)
{
    if (ell.degree() != 1) {
        throw std::invalid_argument("hyperplane: expected a linear form");
    }
    if (ell.is_zero()) {
        throw std::invalid_argument("hyperplane: zero linear form");
    }
    const auto n = static_cast<std::size_t>(ell.nvars());
    const auto coeffs = ell.to_vector();   // basis of degree 1 is x0, x1, ... in order
    std::size_t j = n;
    while (j-- > 0 && coeffs[j] == 0) {
    }
    forward_ = RationalMatrix::identity(n);
    if (j != n - 1) {
        // y_j = x_{n-1}
        for (std::size_t c = 0; c < n; ++c) {
            forward_(j, c) = c == n - 1 ? 1 : 0;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        forward_(n - 1, c) = coeffs[c];
    }
    backward_ = *inverse(forward_);
}

GradedPoly HyperplaneChart::to_chart(const GradedPoly& g) const { return linear_change(g, backward_); }

std::vector<Integer> HyperplaneChart::to_chart(const ProjectivePoint& p) const
{
    const auto n = p.size();
    std::vector<Rational> y(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            y[r] += forward_(r, c) * p[c];
        }
    }
    return primitive(y);
}

std::vector<IdealPiece> restrict_to_hyperplane(const std::vector<IdealPiece>& pieces, const GradedPoly& ell)
{
    const HyperplaneChart chart(ell);
    std::vector<IdealPiece> out;
    for (const auto& piece : pieces) {
        if (piece.nvars() != ell.nvars()) {
            throw std::invalid_argument("restrict_to_hyperplane: ring mismatch");
        }
        RationalMatrix rows(0, monomial_basis(piece.nvars() - 1, piece.degree()).size());
        for (const auto& g : piece.generators()) {
            rows.append_row(substitute_zero(chart.to_chart(g), piece.nvars() - 1).to_vector());
        }
        out.push_back(IdealPiece::from_rows(piece.nvars() - 1, piece.degree(), rows));
    }
    return out;
}

HilbertProfile difference_profile(const HilbertProfile& h_points, const PointSet& points, const GradedPoly& ell)
{
    for (const auto& p : points) {
        if (evaluate(ell, p) == 0) {
            throw NonGenericHyperplane("hyperplane " + ell.to_string() + " passes through " + p.to_string());
        }
    }
    HilbertProfile out;
    for (std::size_t k = 0; k < h_points.size(); ++k) {
        const long v = k == 0 ? 1 : h_points[k] - h_points[k - 1];
        if (v < 0) {
            throw std::invalid_argument("difference_profile: input profile decreases at degree " + std::to_string(k));
        }
        out.push_back(v);
    }
    return out;
}

GradedPoly draw_generic_hyperplane(const PointSet& points, std::uint64_t seed, int max_attempts)
{
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Rational> coeffs;
        for (int i = 0; i < points.nvars(); ++i) {
            coeffs.emplace_back(static_cast<long>(rng() % 997U) + 1);
        }
        const auto ell = GradedPoly::linear_form(coeffs);
        const bool hits = std::any_of(points.begin(), points.end(),
                                      [&](const ProjectivePoint& p) { return evaluate(ell, p) == 0; });
        if (!hits) {
            return ell;
        }
    }
    throw NonGenericHyperplane("no hyperplane avoiding the points after " + std::to_string(max_attempts) + " draws");
}

namespace {

// Rows lambda with sum_p lambda_p g(q_p) = 0 for all g in (I_H)_k and nothing else.
IntegerMatrix restricted_functionals(const PointSet& points, const HyperplaneChart& chart, int k)
{
    const int n = points.nvars();
    std::vector<std::vector<Integer>> q;
    q.reserve(points.size());
    for (const auto& p : points) {
        q.push_back(chart.to_chart(p));
        if (q.back().back() == 0) {
            throw NonGenericHyperplane("point " + p.to_string() + " lies on the hyperplane");
        }
    }
    // U = values of y_last * R_{k-1}; its orthogonal complement is a left kernel.
    IntegerMatrix shifted(points.size(), k >= 1 ? monomial_basis(n, k - 1).size() : 0);
    if (k >= 1) {
        const auto& lower = monomial_basis(n, k - 1);
        for (std::size_t p = 0; p < q.size(); ++p) {
            const auto values = monomial_values(lower, q[p]);
            for (std::size_t c = 0; c < values.size(); ++c) {
                shifted(p, c) = values[c] * q[p].back();
            }
        }
    }
    const IntegerMatrix lambdas = left_kernel(shifted);
    const auto& target = monomial_basis(n - 1, k);
    IntegerMatrix phi(lambdas.rows(), target.size());
    for (std::size_t p = 0; p < q.size(); ++p) {
        const std::vector<Integer> head(q[p].begin(), q[p].end() - 1);
        const auto values = monomial_values(target, head);
        for (std::size_t r = 0; r < lambdas.rows(); ++r) {
            if (lambdas(r, p) == 0) {
                continue;
            }
            for (std::size_t c = 0; c < values.size(); ++c) {
                phi(r, c) += lambdas(r, p) * values[c];
            }
        }
    }
    return phi;
}

} // namespace

IdealPiece restricted_piece(const PointSet& points, const HyperplaneChart& chart, int k)
{
    if (points.empty()) {
        throw std::invalid_argument("restricted_piece: empty point set");
    }
    const auto phi = restricted_functionals(points, chart, k);
    const int n = points.nvars() - 1;
    if (phi.rows() == 0) {
        return IdealPiece::full(n, k);
    }
    return IdealPiece::from_rows(n, k, nullspace(to_rational(phi)));
}

bool Functional::is_zero() const
{
    return std::all_of(values.begin(), values.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix restricted_annihilator(const PointSet& points, const HyperplaneChart& chart, int n_degree)
{
    const auto phi = restricted_functionals(points, chart, n_degree);
    if (phi.rows() == 0) {
        return RationalMatrix(0, monomial_basis(points.nvars() - 1, n_degree).size());
    }
    return rref(to_rational(phi)).basis;
}

Functional socle_functional(const PointSet& points, const HyperplaneChart& chart, int n_degree)
{
    const auto ann = restricted_annihilator(points, chart, n_degree);
    if (ann.rows() == 0) {
        throw std::domain_error("socle_functional: (I_H)_N is all of S_N");
    }
    return Functional{points.nvars() - 1, n_degree, ann.row(0)};
}

RationalMatrix catalecticant(const Functional& phi, int e)
{
    if (e < 0 || e > phi.degree) {
        throw std::invalid_argument("catalecticant: degree out of range");
    }
    const auto& top = monomial_basis(phi.nvars, phi.degree);
    if (phi.values.size() != top.size()) {
        throw std::invalid_argument("catalecticant: functional has wrong length");
    }
    const auto& rows = monomial_basis(phi.nvars, e);
    const auto& cols = monomial_basis(phi.nvars, phi.degree - e);
    RationalMatrix out(rows.size(), cols.size());
    Exponents sum(static_cast<std::size_t>(phi.nvars));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum[i] = rows[r][i] + cols[c][i];
            }
            out(r, c) = phi.values[top.index_of(sum)];
        }
    }
    return out;
}

IdealPiece gorenstein_ancestor(const Functional& phi, int e)
{
    if (phi.is_zero()) {
        throw std::invalid_argument("gorenstein_ancestor: zero functional");
    }
    if (e < 0) {
        throw std::invalid_argument("gorenstein_ancestor: negative degree");
    }
    if (e > phi.degree) {
        return IdealPiece::full(phi.nvars, e);
    }
    return IdealPiece::from_rows(phi.nvars, e, nullspace(catalecticant(phi, e).transpose()));
}

HilbertProfile ancestor_profile(const Functional& phi, Field field)
{
    if (phi.is_zero()) {
        throw std::invalid_argument("ancestor_profile: zero functional");
    }
    HilbertProfile h;
    for (int e = 0; e <= phi.degree; ++e) {
        // symmetric: h(e) = h(N - e)
        if (2 * e > phi.degree) {
            h.push_back(h[static_cast<std::size_t>(phi.degree - e)]);
            continue;
        }
        h.push_back(static_cast<long>(rank(catalecticant(phi, e), field)));
    }
    return h;
}

// ------------------------------------------------------ Macaulay / Gotzmann

std::vector<GrowthViolation> macaulay_growth_audit(const HilbertProfile& profile)
{
    std::vector<GrowthViolation> out;
    for (std::size_t k = 1; k + 1 < profile.size(); ++k) {
        const auto bound = upper_growth(Integer(profile[k]), static_cast<int>(k));
        if (Integer(profile[k + 1]) > bound) {
            out.push_back({static_cast<int>(k), profile[k], profile[k + 1], bound});
        }
    }
    return out;
}

long BaseLocus::as_dim() const
{
    if (kind == Kind::Inconclusive) {
        throw InconclusiveProbe("base locus probe inconclusive at degree " + std::to_string(settled_degree));
    }
    return kind == Kind::Empty ? -1 : dim;
}

std::string BaseLocus::to_string() const
{
    switch (kind) {
    case Kind::Empty:
        return "Empty";
    case Kind::Dim:
        return "Dim(" + std::to_string(dim) + ")";
    case Kind::Inconclusive:
        break;
    }
    return "Inconclusive";
}

int default_degree_cap(int input_degree) { return 4 * input_degree + 10; }

namespace {

// Annihilator of J_{k+1} = J_k * S_1 from the annihilator K of J_k: psi lies
// in it iff every contraction psi(x_i * .) lies in span K.
RationalMatrix next_annihilator(const RationalMatrix& k_rows, int nvars, int k)
{
    const auto h = k_rows.rows();
    const auto& src = monomial_basis(nvars, k);
    const auto& dst = monomial_basis(nvars, k + 1);
    const auto n = static_cast<std::size_t>(nvars);
    if (h == 0) {
        return RationalMatrix(0, dst.size());
    }
    // lower[M][i] = index of M / x_i, or npos
    constexpr auto npos = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::size_t>> lower(dst.size(), std::vector<std::size_t>(n, npos));
    for (std::size_t m = 0; m < dst.size(); ++m) {
        Exponents e = dst[m];
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] > 0) {
                --e[i];
                lower[m][i] = src.index_of(e);
                ++e[i];
            }
        }
    }
    // unknowns c[i*h + j]: psi(x_i * m) = sum_j c[i*h+j] * K_j(m)
    RationalMatrix eqs(0, n * h);
    std::vector<Rational> row(n * h);
    for (std::size_t m = 0; m < dst.size(); ++m) {
        std::size_t first = npos;
        for (std::size_t i = 0; i < n; ++i) {
            if (lower[m][i] == npos) {
                continue;
            }
            if (first == npos) {
                first = i;
                continue;
            }
            std::fill(row.begin(), row.end(), Rational(0));
            bool nonzero = false;
            for (std::size_t j = 0; j < h; ++j) {
                row[first * h + j] = k_rows(j, lower[m][first]);
                row[i * h + j] = -k_rows(j, lower[m][i]);
                nonzero = nonzero || row[first * h + j] != 0 || row[i * h + j] != 0;
            }
            if (nonzero) {
                eqs.append_row(row);
            }
        }
    }
    const RationalMatrix sols = eqs.rows() == 0 ? RationalMatrix::identity(n * h) : nullspace(eqs);
    RationalMatrix psi(sols.rows(), dst.size());
    for (std::size_t s = 0; s < sols.rows(); ++s) {
        for (std::size_t m = 0; m < dst.size(); ++m) {
            std::size_t i = 0;
            while (lower[m][i] == npos) {
                ++i;
            }
            Rational v = 0;
            for (std::size_t j = 0; j < h; ++j) {
                if (sols(s, i * h + j) != 0) {
                    v += sols(s, i * h + j) * k_rows(j, lower[m][i]);
                }
            }
            psi(s, m) = v;
        }
    }
    if (psi.rows() == 0) {
        return psi;
    }
    return rref(psi).basis;
}

} // namespace

BaseLocus base_locus_dimension(const IdealPiece& v, std::optional<int> degree_cap)
{
    if (v.is_zero()) {
        throw std::invalid_argument("base_locus_dimension: zero linear system");
    }
    const int cap = degree_cap.value_or(default_degree_cap(v.degree()));
    const int n = v.nvars();
    // Track J_k directly while it is thin, and its annihilator once that is smaller.
    std::optional<IdealPiece> primal = v;
    RationalMatrix dual;
    long h = v.codim();
    for (int k = v.degree();; ++k) {
        if (h == 0) {
            return BaseLocus::empty(k);
        }
        if (k >= cap) {
            return BaseLocus::inconclusive(k);
        }
        if (primal && static_cast<std::size_t>(h) < primal->dim()) {
            dual = nullspace(primal->basis());
            primal.reset();
        }
        long h_next = 0;
        if (primal) {
            primal = next_degree(*primal);
            h_next = primal->codim();
        } else {
            dual = next_annihilator(dual, n, k);
            h_next = static_cast<long>(dual.rows());
        }
        if (k >= 1 && Integer(h_next) == upper_growth(Integer(h), k)) {
            const long top = expand(Integer(h), k).at(k);
            return top < 0 ? BaseLocus::empty(k) : BaseLocus::dimension(top, k);
        }
        h = h_next;
    }
}

bool corgreen_check(const HilbertProfile& profile, int d, int bpf_degree)
{
    const auto start = static_cast<std::size_t>(std::max({d, bpf_degree - 1, 0}));
    for (std::size_t k = start; k + 1 < profile.size(); ++k) {
        if (profile[k] != 0 && profile[k + 1] >= profile[k]) {
            return false;
        }
    }
    return true;
}

LemdimsResult lemdims_check(const std::vector<IdealPiece>& pieces, int socle_degree, int n, int degree_cap)
{
    if (n < 0) {
        throw std::invalid_argument("lemdims_check: negative dimension");
    }
    // base-locus dimension of I_t for t = 1..T
    std::vector<long> dims(pieces.size(), n);
    for (std::size_t t = 1; t < pieces.size(); ++t) {
        if (pieces[t].nvars() != n + 1 || pieces[t].degree() != static_cast<int>(t)) {
            throw std::invalid_argument("lemdims_check: pieces must be indexed by degree in n+1 variables");
        }
        if (!pieces[t].is_zero()) {
            dims[t] = base_locus_dimension(pieces[t], degree_cap).as_dim();
        }
    }
    LemdimsResult out;
    for (int k = -1; k <= n - 1; ++k) {
        int found = -1;
        for (std::size_t t = 1; t < pieces.size(); ++t) {
            if (dims[t] <= k) {
                found = static_cast<int>(t);
                break;
            }
        }
        if (found < 0) {
            throw std::invalid_argument("lemdims_check: base locus never drops to dimension " + std::to_string(k) +
                                        "; supply pieces past the socle degree");
        }
        out.d_values.push_back(found);
        out.sum += found;
    }
    out.bound = static_cast<long>(socle_degree) + n + 1;
    out.satisfied = out.sum >= out.bound;
    return out;
}

} // namespace defectk
