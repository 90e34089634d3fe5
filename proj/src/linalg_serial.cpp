#include "defectk/linalg.hpp"

namespace defectk::serial {

std::size_t rank(const RationalMatrix& m)
{
    return serial::rref(m).pivots.size();
}

Echelon rref(const RationalMatrix& m)
{
    RationalMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, col) == 0) {
            ++piv;
        }
        if (piv == a.rows()) {
            continue;
        }
        for (std::size_t c = 0; c < a.cols(); ++c) {
            std::swap(a(piv, c), a(r, c));
        }
        const Rational lead = a(r, col);
        for (std::size_t c = 0; c < a.cols(); ++c) {
            a(r, c) /= lead;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) {
                continue;
            }
            const Rational f = a(i, col);
            for (std::size_t c = 0; c < a.cols(); ++c) {
                a(i, c) -= f * a(r, c);
            }
        }
        pivots.push_back(col);
        ++r;
    }
    Echelon out;
    out.basis = RationalMatrix(r, a.cols());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out.basis(i, c) = a(i, c);
        }
    }
    out.pivots = std::move(pivots);
    return out;
}

} // namespace defectk::serial
