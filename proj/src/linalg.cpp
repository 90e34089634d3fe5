#include "defectk/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace defectk {

namespace {

// Below this many cell updates per step the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelCells = 4096;

bool worth_forking(std::size_t rows, std::size_t cols) { return rows * cols >= kParallelCells; }

void swap_rows(IntegerMatrix& a, std::size_t r1, std::size_t r2)
{
    if (r1 == r2) {
        return;
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a(r1, c), a(r2, c));
    }
}

// One Bareiss step: eliminate column `col` below pivot row `r`, touching columns
// [col, width). Returns nothing; rows r+1.. are updated in parallel.
void bareiss_step(IntegerMatrix& a, std::size_t r, std::size_t col, std::size_t width, const Integer& prev)
{
    const std::size_t rows = a.rows();
    const Integer pivot = a(r, col);
    std::vector<std::size_t> support;
    for (std::size_t j = col + 1; j < width; ++j) {
        if (a(r, j) != 0) {
            support.push_back(j);
        }
    }
    const bool unit_prev = prev == 1;
    const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (worth_forking(rows - r, width - col))
    for (std::ptrdiff_t si = static_cast<std::ptrdiff_t>(r) + 1; si < n; ++si) {
        const auto i = static_cast<std::size_t>(si);
        const Integer factor = a(i, col);
        if (factor == 0) {
            // pivot*a(i,j)/prev; zero entries stay zero
            for (std::size_t j = col + 1; j < width; ++j) {
                if (a(i, j) != 0) {
                    a(i, j) *= pivot;
                    if (!unit_prev) {
                        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
                    }
                }
            }
            continue;
        }
        Integer tmp;
        std::size_t k = 0;
        for (std::size_t j = col + 1; j < width; ++j) {
            const bool in_support = k < support.size() && support[k] == j;
            if (in_support) {
                ++k;
            }
            auto& x = a(i, j);
            if (x == 0 && !in_support) {
                continue;
            }
            x *= pivot;
            if (in_support) {
                tmp = factor * a(r, j);
                x -= tmp;
            }
            if (!unit_prev) {
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        }
        a(i, col) = 0;
    }
}

std::optional<std::size_t> find_pivot(const IntegerMatrix& a, std::size_t from, std::size_t col)
{
    // Smallest nonzero entry keeps the next pivot (and so the minors) small.
    std::optional<std::size_t> best;
    for (std::size_t i = from; i < a.rows(); ++i) {
        if (a(i, col) != 0 && (!best || mpz_cmpabs(a(i, col).get_mpz_t(), a(*best, col).get_mpz_t()) < 0)) {
            best = i;
        }
    }
    return best;
}

} // namespace

IntegerMatrix clear_denominators(const RationalMatrix& m)
{
    IntegerMatrix out(m.rows(), m.cols());
    const auto n = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for if (worth_forking(m.rows(), m.cols()))
    for (std::ptrdiff_t si = 0; si < n; ++si) {
        const auto r = static_cast<std::size_t>(si);
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& q = m(r, c);
            if (q == 0) {
                continue;
            }
            Integer scaled = l;
            mpz_divexact(scaled.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
            out(r, c) = scaled * q.get_num();
        }
    }
    return out;
}

std::optional<ModPMatrix> reduce_mod(const RationalMatrix& m, std::uint32_t p)
{
    ModPMatrix out(m.rows(), m.cols(), ModP(0, p));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (mpz_divisible_ui_p(m(r, c).get_den_mpz_t(), p) != 0) {
                return std::nullopt;
            }
            out(r, c) = ModP::from_rational(m(r, c), p);
        }
    }
    return out;
}

std::size_t rank(const IntegerMatrix& m)
{
    // Eliminate along the short side.
    IntegerMatrix a = m.rows() > m.cols() ? m.transpose() : m;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        const auto p = find_pivot(a, r, col);
        if (!p) {
            continue;
        }
        swap_rows(a, r, *p);
        bareiss_step(a, r, col, a.cols(), prev);
        prev = a(r, col);
        ++r;
    }
    return r;
}

std::size_t rank(const RationalMatrix& m) { return rank(clear_denominators(m)); }

std::size_t rank(const ModPMatrix& m)
{
    if (m.empty()) {
        return 0;
    }
    const std::uint64_t p = m(0, 0).prime();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            a[r * cols + c] = m(r, c).value();
        }
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + col] == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        if (piv != r) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
        const std::uint64_t inv = ModP(static_cast<std::int64_t>(a[r * cols + col]), static_cast<std::uint32_t>(p)).inverse().value();
        for (std::size_t j = col; j < cols; ++j) {
            a[r * cols + j] = a[r * cols + j] * inv % p;
        }
        const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for if (worth_forking(rows - r, cols - col))
        for (std::ptrdiff_t si = static_cast<std::ptrdiff_t>(r) + 1; si < n; ++si) {
            const auto i = static_cast<std::size_t>(si);
            const std::uint64_t f = a[i * cols + col];
            if (f == 0) {
                continue;
            }
            for (std::size_t j = col; j < cols; ++j) {
                a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
            }
        }
        ++r;
    }
    return r;
}

std::size_t rank(const RationalMatrix& m, Field field)
{
    if (field.is_rational()) {
        return rank(m);
    }
    if (auto reduced = reduce_mod(m, field.prime)) {
        return rank(*reduced);
    }
    return rank(m);
}

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant: matrix not square");
    }
    if (m.rows() == 0) {
        return 1;
    }
    IntegerMatrix a = clear_denominators(m);
    // each row r of a is l_r times row r of m, l_r the lcm of its denominators
    Integer scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        scale *= l;
    }
    Integer prev = 1;
    int sign = 1;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const auto p = find_pivot(a, k, k);
        if (!p) {
            return 0;
        }
        if (*p != k) {
            swap_rows(a, k, *p);
            sign = -sign;
        }
        bareiss_step(a, k, k, n, prev);
        prev = a(k, k);
    }
    Rational det(prev * sign);
    det /= scale;
    det.canonicalize();
    return det;
}

ModP determinant(const ModPMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant: matrix not square");
    }
    if (m.rows() == 0) {
        return ModP(1, 3);
    }
    ModPMatrix a = m;
    const std::size_t n = a.rows();
    const auto p = a(0, 0).prime();
    ModP det(1, p);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return ModP(0, p);
        }
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(k, c));
            }
            det = ModP(0, p) - det;
        }
        det = det * a(k, k);
        const ModP inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            const ModP f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(k, j);
            }
        }
    }
    return det;
}

Echelon rref(const RationalMatrix& m)
{
    RationalMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a(piv, col) == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        if (piv != r) {
            for (std::size_t c = col; c < cols; ++c) {
                std::swap(a(piv, c), a(r, c));
            }
        }
        const Rational inv = 1 / a(r, col);
        std::vector<std::size_t> support;
        for (std::size_t j = col; j < cols; ++j) {
            if (a(r, j) != 0) {
                a(r, j) *= inv;
                support.push_back(j);
            }
        }
        const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (worth_forking(rows, support.size()))
        for (std::ptrdiff_t si = 0; si < n; ++si) {
            const auto i = static_cast<std::size_t>(si);
            if (i == r || a(i, col) == 0) {
                continue;
            }
            const Rational f = a(i, col);
            Rational tmp;
            for (const auto j : support) {
                tmp = f * a(r, j);
                a(i, j) -= tmp;
            }
        }
        pivots.push_back(col);
        ++r;
    }
    Echelon out;
    out.basis = RationalMatrix(r, cols);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
            out.basis(i, c) = a(i, c);
        }
    }
    out.pivots = std::move(pivots);
    return out;
}

RationalMatrix nullspace(const RationalMatrix& m)
{
    const auto ech = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (const auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    RationalMatrix out(0, cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
            v[ech.pivots[i]] = -ech.basis(i, free);
        }
        out.append_row(v);
    }
    return out;
}

IntegerMatrix left_kernel(const IntegerMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntegerMatrix a(rows, cols + rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            a(r, c) = m(r, c);
        }
        a(r, cols + r) = 1;
    }
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        const auto p = find_pivot(a, r, col);
        if (!p) {
            continue;
        }
        swap_rows(a, r, *p);
        bareiss_step(a, r, col, a.cols(), prev);
        prev = a(r, col);
        ++r;
    }
    IntegerMatrix out(rows - r, rows);
    for (std::size_t i = r; i < rows; ++i) {
        Integer g = 0;
        for (std::size_t c = 0; c < rows; ++c) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, cols + c).get_mpz_t());
        }
        for (std::size_t c = 0; c < rows; ++c) {
            out(i - r, c) = a(i, cols + c);
            if (g > 1) {
                mpz_divexact(out(i - r, c).get_mpz_t(), out(i - r, c).get_mpz_t(), g.get_mpz_t());
            }
        }
    }
    return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("multiply: shape mismatch");
    }
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("inverse: matrix not square");
    }
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, n + r) = 1;
    }
    const auto ech = rref(aug);
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
        return std::nullopt;
    }
    RationalMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = ech.basis(r, n + c);
        }
    }
    return out;
}

} // namespace defectk
