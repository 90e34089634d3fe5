#include "defectk/poly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace defectk {

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) {
        return da > db;
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

namespace {

void enumerate(int nvars, int remaining, std::size_t pos, Exponents& cur, std::vector<Exponents>& out)
{
    if (pos + 1 == static_cast<std::size_t>(nvars)) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate(nvars, remaining - e, pos + 1, cur, out);
    }
}

} // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree)
{
    if (nvars < 1 || degree < 0) {
        throw std::invalid_argument("monomial_basis: need nvars >= 1 and degree >= 0");
    }
    Exponents cur(static_cast<std::size_t>(nvars), 0);
    enumerate(nvars, degree, 0, cur, monomials_);
    std::sort(monomials_.begin(), monomials_.end(), GrevlexGreater{});
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        index_.emplace(monomials_[i], i);
    }
}

std::size_t MonomialBasis::index_of(const Exponents& e) const
{
    const auto it = index_.find(e);
    if (it == index_.end()) {
        throw std::out_of_range("monomial not in basis");
    }
    return it->second;
}

const MonomialBasis& monomial_basis(int nvars, int degree)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{nvars, degree}];
    if (!slot) {
        slot = std::make_unique<MonomialBasis>(nvars, degree);
    }
    return *slot;
}

GradedPoly::GradedPoly(int nvars, int degree) : nvars_(nvars), degree_(degree)
{
    if (nvars < 1 || degree < 0) {
        throw std::invalid_argument("GradedPoly: need nvars >= 1 and degree >= 0");
    }
}

GradedPoly GradedPoly::variable(int nvars, int i)
{
    if (i < 0 || i >= nvars) {
        throw std::out_of_range("variable index out of range");
    }
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(e);
}

GradedPoly GradedPoly::constant(int nvars, const Rational& c)
{
    GradedPoly p(nvars, 0);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

GradedPoly GradedPoly::monomial(const Exponents& e, const Rational& c)
{
    GradedPoly p(static_cast<int>(e.size()), total_degree(e));
    p.add_term(e, c);
    return p;
}

GradedPoly GradedPoly::linear_form(const std::vector<Rational>& coeffs)
{
    const int n = static_cast<int>(coeffs.size());
    GradedPoly p(n, 1);
    for (int i = 0; i < n; ++i) {
        Exponents e(coeffs.size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, coeffs[static_cast<std::size_t>(i)]);
    }
    return p;
}

GradedPoly GradedPoly::from_vector(int nvars, int degree, const std::vector<Rational>& coords)
{
    const auto& basis = monomial_basis(nvars, degree);
    if (coords.size() != basis.size()) {
        throw std::invalid_argument("from_vector: length does not match monomial basis");
    }
    GradedPoly p(nvars, degree);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        p.add_term(basis[i], coords[i]);
    }
    return p;
}

Rational GradedPoly::coefficient(const Exponents& e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != static_cast<std::size_t>(nvars_)) {
        throw std::invalid_argument("add_term: exponent length mismatch");
    }
    if (total_degree(e) != degree_) {
        throw std::invalid_argument("add_term: inhomogeneous term");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

std::vector<Rational> GradedPoly::to_vector() const
{
    const auto& basis = monomial_basis(nvars_, degree_);
    std::vector<Rational> v(basis.size());
    for (const auto& [e, c] : terms_) {
        v[basis.index_of(e)] = c;
    }
    return v;
}

std::string GradedPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        const Rational mag = abs(c);
        const bool is_const = total_degree(e) == 0;
        if (mag != 1 || is_const) {
            out << mag.get_str();
        }
        bool need_star = mag != 1 || is_const;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            out << (need_star ? "*" : "") << "x" << i;
            if (e[i] > 1) {
                out << "^" << e[i];
            }
            need_star = true;
        }
        first = false;
    }
    return out.str();
}

void GradedPoly::check_compatible(const GradedPoly& o) const
{
    if (nvars_ != o.nvars_ || degree_ != o.degree_) {
        throw std::invalid_argument("GradedPoly: incompatible operands");
    }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= s;
    }
    return *this;
}

GradedPoly multiply(const GradedPoly& f, const GradedPoly& g)
{
    if (f.nvars() != g.nvars()) {
        throw std::invalid_argument("multiply: nvars mismatch");
    }
    GradedPoly out(f.nvars(), f.degree() + g.degree());
    Exponents e(static_cast<std::size_t>(f.nvars()));
    for (const auto& [ea, ca] : f.terms()) {
        for (const auto& [eb, cb] : g.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

GradedPoly power(const GradedPoly& f, int e)
{
    if (e < 0) {
        throw std::invalid_argument("power: negative exponent");
    }
    GradedPoly acc = GradedPoly::constant(f.nvars(), 1);
    GradedPoly base = f;
    while (e > 0) {
        if (e & 1) {
            acc = multiply(acc, base);
        }
        e >>= 1;
        if (e > 0) {
            base = multiply(base, base);
        }
    }
    return acc;
}

GradedPoly partial_derivative(const GradedPoly& f, int i)
{
    if (f.degree() < 1) {
        throw std::invalid_argument("partial_derivative: degree-0 form");
    }
    if (i < 0 || i >= f.nvars()) {
        throw std::out_of_range("partial_derivative: variable index out of range");
    }
    const auto idx = static_cast<std::size_t>(i);
    GradedPoly out(f.nvars(), f.degree() - 1);
    for (const auto& [e, c] : f.terms()) {
        if (e[idx] == 0) {
            continue;
        }
        Exponents d = e;
        d[idx] -= 1;
        out.add_term(d, c * e[idx]);
    }
    return out;
}

GradedPoly substitute_zero(const GradedPoly& f, int i)
{
    if (f.nvars() < 2) {
        throw std::invalid_argument("substitute_zero: need at least two variables");
    }
    if (i < 0 || i >= f.nvars()) {
        throw std::out_of_range("substitute_zero: variable index out of range");
    }
    const auto idx = static_cast<std::size_t>(i);
    GradedPoly out(f.nvars() - 1, f.degree());
    for (const auto& [e, c] : f.terms()) {
        if (e[idx] != 0) {
            continue;
        }
        Exponents d;
        d.reserve(e.size() - 1);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j != idx) {
                d.push_back(e[j]);
            }
        }
        out.add_term(d, c);
    }
    return out;
}

GradedPoly linear_change(const GradedPoly& f, const RationalMatrix& m)
{
    const auto n = static_cast<std::size_t>(f.nvars());
    if (m.rows() != n || m.cols() != n) {
        throw std::invalid_argument("linear_change: matrix shape does not match nvars");
    }
    if (determinant(m) == 0) {
        throw std::invalid_argument("linear_change: singular matrix");
    }
    // powers[i][k] = (row i of m, as a linear form)^k
    std::vector<std::vector<GradedPoly>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        const GradedPoly lin = GradedPoly::linear_form(m.row(i));
        powers[i].push_back(GradedPoly::constant(f.nvars(), 1));
        for (int k = 1; k <= f.degree(); ++k) {
            powers[i].push_back(multiply(powers[i].back(), lin));
        }
    }
    GradedPoly out(f.nvars(), f.degree());
    for (const auto& [e, c] : f.terms()) {
        GradedPoly term = GradedPoly::constant(f.nvars(), c);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] != 0) {
                term = multiply(term, powers[i][static_cast<std::size_t>(e[i])]);
            }
        }
        out += term;
    }
    return out;
}

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords))
{
    std::size_t lead = 0;
    while (lead < coords_.size() && coords_[lead] == 0) {
        ++lead;
    }
    if (lead == coords_.size()) {
        throw std::invalid_argument("projective point: zero vector");
    }
    const Rational inv = 1 / coords_[lead];
    for (auto& q : coords_) {
        q *= inv;
    }
}

ProjectivePoint ProjectivePoint::from_integers(const std::vector<long>& coords)
{
    std::vector<Rational> q;
    q.reserve(coords.size());
    for (const long v : coords) {
        q.emplace_back(v);
    }
    return ProjectivePoint(std::move(q));
}

std::size_t ProjectivePoint::chart() const
{
    std::size_t i = 0;
    while (coords_[i] == 0) {
        ++i;
    }
    return i;
}

std::vector<Integer> ProjectivePoint::integer_coords() const
{
    Integer l = 1;
    for (const auto& q : coords_) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Integer> out;
    out.reserve(coords_.size());
    for (const auto& q : coords_) {
        Integer s = l;
        mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
        out.push_back(s * q.get_num());
    }
    return out;
}

std::string ProjectivePoint::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        s += (i ? ":" : "") + coords_[i].get_str();
    }
    return s + ")";
}

Rational evaluate(const GradedPoly& f, const std::vector<Rational>& coords)
{
    if (coords.size() != static_cast<std::size_t>(f.nvars())) {
        throw std::invalid_argument("evaluate: point dimension mismatch");
    }
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; })) {
        throw std::invalid_argument("evaluate: zero vector");
    }
    std::vector<std::vector<Rational>> pw(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        pw[i].push_back(Rational(1));
        for (int k = 1; k <= f.degree(); ++k) {
            pw[i].push_back(pw[i].back() * coords[i]);
        }
    }
    Rational acc = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                t *= pw[i][static_cast<std::size_t>(e[i])];
            }
        }
        acc += t;
    }
    return acc;
}

Rational evaluate(const GradedPoly& f, const ProjectivePoint& p) { return evaluate(f, p.coords()); }

} // namespace defectk
