#include "defectk/macaulay.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace defectk {

namespace {

void require(bool ok, const char* what)
{
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

// Largest e >= -1 with binom(i + e, i) <= c.
long largest_eps(const Integer& c, int i)
{
    if (c == 0) {
        return -1;
    }
    // binom(i + e, i) is increasing in e >= 0 for i >= 1; bracket then bisect.
    long lo = 0;
    long hi = 1;
    while (binom(i + hi, i) <= c) {
        if (hi > std::numeric_limits<long>::max() / 4) {
            throw std::overflow_error("expand: eps does not fit in a long");
        }
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (binom(i + mid, i) <= c) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

} // namespace

Integer MacaulayExpansion::reconstruct() const
{
    Integer sum = 0;
    for (int i = 1; i <= d; ++i) {
        sum += binom(i + at(i), i);
    }
    return sum;
}

bool MacaulayExpansion::well_formed() const
{
    if (eps.size() != static_cast<std::size_t>(d)) {
        return false;
    }
    for (std::size_t j = 0; j < eps.size(); ++j) {
        if (eps[j] < -1 || (j + 1 < eps.size() && eps[j] < eps[j + 1])) {
            return false;
        }
    }
    return true;
}

std::string MacaulayExpansion::eps_string() const
{
    std::ostringstream out;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        out << (j ? "," : "") << eps[j];
    }
    return out.str();
}

MacaulayExpansion expand(const Integer& c, int d)
{
    require(c >= 0, "expand: c must be nonnegative");
    require(d >= 1, "expand: d must be positive");
    MacaulayExpansion out{c, d, {}};
    out.eps.reserve(static_cast<std::size_t>(d));
    Integer rest = c;
    for (int i = d; i >= 1; --i) {
        const long e = largest_eps(rest, i);
        out.eps.push_back(e);
        rest -= binom(i + e, i);
    }
    return out;
}

Integer upper_growth(const Integer& c, int d)
{
    const auto ex = expand(c, d);
    Integer sum = 0;
    for (int i = 1; i <= d; ++i) {
        sum += binom(i + ex.at(i) + 1, i + 1);
    }
    return sum;
}

Integer hyperplane_bound(const Integer& c, int d)
{
    const auto ex = expand(c, d);
    Integer sum = 0;
    for (int i = 1; i <= d; ++i) {
        sum += binom(i + ex.at(i) - 1, i);
    }
    return sum;
}

LowerShift lower_shift(const Integer& c, int d)
{
    require(d >= 2, "lower_shift: d must be at least 2");
    const auto ex = expand(c, d);
    LowerShift out;
    for (int i = 2; i <= d; ++i) {
        out.value += binom(i + ex.at(i) - 1, i - 1);
    }
    out.strict = ex.at(1) >= 0;
    return out;
}

long low_degree_floor(long c, int d, int k)
{
    require(d >= 1, "low_degree_floor: d must be positive");
    require(k >= 0 && k <= d, "low_degree_floor: need 0 <= k <= d");
    require(c >= 0, "low_degree_floor: c must be nonnegative");
    require(c <= 2L * d + 1, "low_degree_floor: only defined for c <= 2d+1");
    if (c <= d) {
        return std::min<long>(c, k + 1);
    }
    if (c <= 2L * d) {
        return std::min<long>(k + (c - d), 2L * k + 1);
    }
    return 2L * k + 1;
}

Integer ci_hilbert(const std::vector<int>& multidegree, int nvars, int k)
{
    require(nvars >= 1, "ci_hilbert: nvars must be positive");
    require(k >= 0, "ci_hilbert: k must be nonnegative");
    require(multidegree.size() <= static_cast<std::size_t>(nvars),
            "ci_hilbert: more generators than variables");
    const auto len = static_cast<std::size_t>(k) + 1;
    // 1 / (1-t)^nvars truncated: binom(j + nvars - 1, nvars - 1).
    std::vector<Integer> series(len);
    for (std::size_t j = 0; j < len; ++j) {
        series[j] = binom(static_cast<long>(j) + nvars - 1, nvars - 1);
    }
    for (const int deg : multidegree) {
        require(deg >= 1, "ci_hilbert: degrees must be positive");
        // multiply by (1 - t^deg) in place, high to low
        for (std::size_t j = len; j-- > static_cast<std::size_t>(deg);) {
            series[j] -= series[j - static_cast<std::size_t>(deg)];
        }
    }
    return series[static_cast<std::size_t>(k)];
}

Integer ci_pnd(int n, int d)
{
    require(n >= 1 && d > 2, "ci_pnd: need n >= 1 and d > 2");
    return binom(d + n + 1, n + 1) - Integer((n + 1) * (n + 2));
}

Integer c0_value(int n, int d)
{
    const long tail = (3L * n * n + 9L * n + 4) / 2;
    return binom(d + n + 1, n + 1) - binom(d + n - 1, n + 1) - Integer(tail);
}

MacaulayExpansion c0_closed_form(int n, int d)
{
    require(n >= 16, "c0 closed form: need n >= 16");
    require(d >= 5, "c0 closed form: need d >= 5");
    MacaulayExpansion out{c0_value(n, d), d, {}};
    out.eps.push_back(n);                     // binom(d+n, d)
    for (int i = d - 1; i >= 4; --i) {
        out.eps.push_back(n - 1);             // binom(i+n-1, i)
    }
    out.eps.push_back(n - 4);                 // binom(n-1, 3)
    out.eps.push_back(n - 7);                 // binom(n-5, 2)
    out.eps.push_back(n - 16);                // binom(n-15, 1)
    return out;
}

bool c0_expansion_identity(int n, int d)
{
    const auto closed = c0_closed_form(n, d);
    return expand(closed.c, d) == closed;
}

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs, long dimension)
    : coeffs_(std::move(coeffs)), dimension_(dimension)
{
    trim();
}

void HilbertPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational HilbertPolynomial::operator()(const Rational& t) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

bool HilbertPolynomial::integer_valued(long upto) const
{
    for (long t = 0; t <= upto; ++t) {
        if ((*this)(Rational(t)).get_den() != 1) {
            return false;
        }
    }
    return true;
}

std::string HilbertPolynomial::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        const auto& a = coeffs_[j];
        if (a == 0) {
            continue;
        }
        if (!first) {
            out << (a > 0 ? " + " : " - ");
        } else if (a < 0) {
            out << "-";
        }
        const Rational mag = abs(a);
        if (j == 0 || mag != 1) {
            out << mag.get_str();
        }
        if (j >= 1) {
            out << "t";
        }
        if (j >= 2) {
            out << "^" << j;
        }
        first = false;
    }
    return out.str();
}

HilbertPolynomial gotzmann_polynomial(const Integer& c, int d)
{
    const auto ex = expand(c, d);
    std::vector<Rational> total;
    for (int i = 1; i <= d; ++i) {
        const long e = ex.at(i);
        if (e < 0) {
            continue;
        }
        // binom(t + s, e) = prod_{j=0}^{e-1} (t + s - j) / e!, s = i + e - d
        const long shift = i + e - d;
        std::vector<Rational> poly{Rational(1)};
        for (long j = 0; j < e; ++j) {
            std::vector<Rational> next(poly.size() + 1);
            const Rational a(shift - j);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k] * a;
                next[k + 1] += poly[k];
            }
            poly = std::move(next);
        }
        Integer fact = 1;
        for (long j = 2; j <= e; ++j) {
            fact *= j;
        }
        if (total.size() < poly.size()) {
            total.resize(poly.size());
        }
        for (std::size_t k = 0; k < poly.size(); ++k) {
            total[k] += poly[k] / Rational(fact);
        }
    }
    for (auto& q : total) {
        q.canonicalize();
    }
    return HilbertPolynomial(std::move(total), ex.at(d));
}

} // namespace defectk
