// Serial reference against the OpenMP kernels on evaluation matrices of the
// plane family. Usage: bench_kernels [max_d]  (default 7)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "defectk/families.hpp"

using namespace defectk;

namespace {

template <typename F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RationalMatrix as_rational(const IntegerMatrix& m)
{
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = Rational(m(r, c));
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    const int max_d = argc > 1 ? std::atoi(argv[1]) : 7;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-3s %-4s %-10s %-10s %-10s %-10s %-10s %-5s\n", "d", "k", "shape", "eval_build", "bareiss",
                "rref_omp", "rref_ser", "same");
    bool all_same = true;
    for (int d = 3; d <= max_d; ++d) {
        const auto x = plane_family(GridParams::plane(d));
        const int k = 2 * d - 5;
        IntegerMatrix e;
        const double t_build = seconds([&] { e = evaluation_matrix(x.nodes, k); });
        std::size_t r_int = 0;
        const double t_bareiss = seconds([&] { r_int = rank(e); });
        // rref of the transpose: one row per monomial, the tall case used for nullspaces
        const RationalMatrix q = as_rational(e).transpose();
        Echelon par;
        Echelon ser;
        const double t_par = seconds([&] { par = rref(q); });
        const double t_ser = seconds([&] { ser = serial::rref(q); });
        const bool same = par.basis == ser.basis && par.pivots == ser.pivots && par.pivots.size() == r_int;
        all_same = all_same && same;
        const std::string shape = std::to_string(q.rows()) + "x" + std::to_string(q.cols());
        std::printf("%-3d %-4d %-10s %-10.4f %-10.4f %-10.4f %-10.4f %-5s\n", d, k, shape.c_str(), t_build,
                    t_bareiss, t_par, t_ser, same ? "yes" : "NO");
    }
    return all_same ? 0 : 1;
}
