#pragma once

// Defective nodal instances with rational nodes in closed form, plus random
// control point sets. Each constructor audits its declared nodes.

#include <cstdint>
#include <string>
#include <vector>

#include "defectk/defect.hpp"

namespace defectk {

struct GridParams {
    int d = 0;
    std::vector<long> a;
    std::vector<long> b;

    /// a = (1..d-1), b = (1..d-1).
    static GridParams plane(int d);
    /// a = (1..d), b = (1..2d-1).
    static GridParams double_solid(int d);

    friend bool operator==(const GridParams&, const GridParams&) = default;
};

/// x0*(A + x0^(d-1) + x1^(d-1)) + x1*(B + x1^(d-1)) in P^4 with
/// A = prod(x2 - a_i x4), B = prod(x3 - b_j x4); nodes (0:0:a_i:b_j:1).
/// The pure-power terms keep the singular locus equal to the grid.
NodalHypersurface plane_family(const GridParams& params, Field field = {});

/// y^2 = h^2 + x3*(g + x3^(2d-1)) with h = prod(x1 - a_i x0),
/// g = prod(x2 - b_j x0); nodes (1:a_i:b_j:0).
DoubleSolid double_solid_family(const GridParams& params, Field field = {});

struct HighdimParams {
    int n = 0;
    int d = 0;
    std::vector<std::vector<long>> values;   // n+1 lists of d-1 distinct integers

    static HighdimParams grid(int n, int d);

    friend bool operator==(const HighdimParams&, const HighdimParams&) = default;
};

/// Default ceiling on evaluation-matrix cells for ci_family_highdim.
inline constexpr std::size_t kDefaultCellBudget = 20'000'000;

/// sum_i x_i*(f_i + sum_{j>=i} x_j^(d-1)) in variables x_0..x_n, z_0..z_{n+1},
/// f_i = prod_a (z_i - a z_{n+1}); nodes x = 0, z_i = a_{i,*}, z_{n+1} = 1.
/// Refuses instances whose largest evaluation matrix exceeds cell_budget.
NodalHypersurface ci_family_highdim(const HighdimParams& params, Field field = {},
                                    std::size_t cell_budget = kDefaultCellBudget);

/// count pairwise distinct rational points in P^{nvars-1}, reproducible from seed.
PointSet random_points_control(std::size_t count, int nvars, std::uint64_t seed);

struct SingularProbe {
    std::uint32_t prime = 0;
    std::uint64_t points_checked = 0;
    std::uint64_t singular_found = 0;
    std::vector<std::vector<std::uint32_t>> undeclared;   // normalised coordinates mod p
    bool skipped = false;
    std::string note;
};

/// Enumerates P^{nvars-1}(F_p) and reports singular points of V(f) that are not
/// reductions of declared nodes. Skips (with a note) when the space has more
/// than max_points points.
SingularProbe probe_singular_points(const GradedPoly& f, const PointSet& declared, std::uint32_t prime = 11,
                                    std::uint64_t max_points = 4'000'000);

} // namespace defectk
