#include "defectk/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "defectk/errors.hpp"
#include "defectk/numeric.hpp"

namespace defectk {

namespace {

void require_distinct(const std::vector<long>& v, const std::string& what)
{
    std::set<long> seen(v.begin(), v.end());
    if (seen.size() != v.size()) {
        throw std::invalid_argument(what + ": values must be pairwise distinct");
    }
}

void require_length(const std::vector<long>& v, std::size_t n, const std::string& what)
{
    if (v.size() != n) {
        throw std::invalid_argument(what + ": expected " + std::to_string(n) + " values, got " +
                                    std::to_string(v.size()));
    }
}

std::vector<long> iota_list(long count)
{
    std::vector<long> v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), 1L);
    return v;
}

GradedPoly var(int nvars, int i) { return GradedPoly::variable(nvars, i); }

// prod_v (x_i - v x_j)
GradedPoly linear_product(int nvars, int i, int j, const std::vector<long>& values)
{
    GradedPoly out = GradedPoly::constant(nvars, 1);
    for (long v : values) {
        out = multiply(out, var(nvars, i) - var(nvars, j) * Rational(v));
    }
    return out;
}

} // namespace

GridParams GridParams::plane(int d)
{
    return {d, iota_list(d - 1), iota_list(d - 1)};
}

GridParams GridParams::double_solid(int d)
{
    return {d, iota_list(d), iota_list(2L * d - 1)};
}

NodalHypersurface plane_family(const GridParams& params, Field field)
{
    const int d = params.d;
    if (d < 3) {
        throw std::invalid_argument("plane_family: d must be at least 3");
    }
    require_length(params.a, static_cast<std::size_t>(d - 1), "plane_family a");
    require_length(params.b, static_cast<std::size_t>(d - 1), "plane_family b");
    require_distinct(params.a, "plane_family a");
    require_distinct(params.b, "plane_family b");

    constexpr int nv = 5;
    const auto A = linear_product(nv, 2, 4, params.a);
    const auto B = linear_product(nv, 3, 4, params.b);
    const auto x0 = var(nv, 0);
    const auto x1 = var(nv, 1);
    const auto f = multiply(x0, A + power(x0, d - 1) + power(x1, d - 1)) + multiply(x1, B + power(x1, d - 1));

    std::vector<ProjectivePoint> nodes;
    for (long a : params.a) {
        for (long b : params.b) {
            nodes.push_back(ProjectivePoint::from_integers({0, 0, a, b, 1}));
        }
    }
    return make_nodal_hypersurface(f, PointSet(nv, std::move(nodes)), field);
}

DoubleSolid double_solid_family(const GridParams& params, Field field)
{
    const int d = params.d;
    if (d < 2) {
        throw std::invalid_argument("double_solid_family: d must be at least 2");
    }
    require_length(params.a, static_cast<std::size_t>(d), "double_solid_family a");
    require_length(params.b, static_cast<std::size_t>(2 * d - 1), "double_solid_family b");
    require_distinct(params.a, "double_solid_family a");
    require_distinct(params.b, "double_solid_family b");

    constexpr int nv = 4;
    const auto h = linear_product(nv, 1, 0, params.a);
    const auto g = linear_product(nv, 2, 0, params.b);
    const auto x3 = var(nv, 3);
    const auto f = multiply(h, h) + multiply(x3, g + power(x3, 2 * d - 1));

    std::vector<ProjectivePoint> nodes;
    for (long a : params.a) {
        for (long b : params.b) {
            nodes.push_back(ProjectivePoint::from_integers({1, a, b, 0}));
        }
    }
    return make_double_solid(f, PointSet(nv, std::move(nodes)), field);
}

HighdimParams HighdimParams::grid(int n, int d)
{
    return {n, d, std::vector<std::vector<long>>(static_cast<std::size_t>(n + 1), iota_list(d - 1))};
}

NodalHypersurface ci_family_highdim(const HighdimParams& params, Field field, std::size_t cell_budget)
{
    const int n = params.n;
    const int d = params.d;
    if (n < 1 || d < 3) {
        throw std::invalid_argument("ci_family_highdim: need n >= 1 and d >= 3");
    }
    if (params.values.size() != static_cast<std::size_t>(n + 1)) {
        throw std::invalid_argument("ci_family_highdim: expected n+1 value lists");
    }
    for (const auto& v : params.values) {
        require_length(v, static_cast<std::size_t>(d - 1), "ci_family_highdim values");
        require_distinct(v, "ci_family_highdim values");
    }
    const int nv = 2 * n + 3;
    long node_count = 1;
    for (int i = 0; i <= n; ++i) {
        node_count *= d - 1;
    }
    const int top = std::max(d, critical_degree_highdim(n, d) + 1);
    const Integer cells = binom(static_cast<long>(top + nv - 1), static_cast<long>(nv - 1)) * node_count;
    if (cells > Integer(static_cast<unsigned long>(cell_budget))) {
        throw std::length_error("ci_family_highdim: evaluation matrix of " + to_string(cells) +
                                " cells exceeds the budget of " + std::to_string(cell_budget));
    }

    const int zlast = nv - 1;
    GradedPoly f(nv, d);
    for (int i = 0; i <= n; ++i) {
        GradedPoly inner = linear_product(nv, n + 1 + i, zlast, params.values[static_cast<std::size_t>(i)]);
        for (int j = i; j <= n; ++j) {
            inner += power(var(nv, j), d - 1);
        }
        f += multiply(var(nv, i), inner);
    }

    // every choice of one value per list
    std::vector<ProjectivePoint> nodes;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n + 1), 0);
    for (;;) {
        std::vector<long> coords(static_cast<std::size_t>(nv), 0);
        for (int i = 0; i <= n; ++i) {
            coords[static_cast<std::size_t>(n + 1 + i)] = params.values[static_cast<std::size_t>(i)][pick[i]];
        }
        coords.back() = 1;
        nodes.push_back(ProjectivePoint::from_integers(coords));
        std::size_t i = pick.size();
        while (i-- > 0) {
            if (++pick[i] < static_cast<std::size_t>(d - 1)) {
                break;
            }
            pick[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) {
            break;
        }
    }
    return make_nodal_hypersurface(f, PointSet(nv, std::move(nodes)), field);
}

PointSet random_points_control(std::size_t count, int nvars, std::uint64_t seed)
{
    if (count < 1) {
        throw std::invalid_argument("random_points_control: count must be positive");
    }
    if (nvars < 2) {
        throw std::invalid_argument("random_points_control: need at least 2 variables");
    }
    std::mt19937_64 rng(seed);
    std::set<ProjectivePoint> seen;
    std::vector<ProjectivePoint> points;
    while (points.size() < count) {
        std::vector<Rational> coords;
        bool nonzero = false;
        for (int i = 0; i < nvars; ++i) {
            const long num = static_cast<long>(rng() % 199U) - 99;
            const long den = static_cast<long>(rng() % 9U) + 1;
            coords.emplace_back(num, den);
            coords.back().canonicalize();
            nonzero = nonzero || num != 0;
        }
        if (!nonzero) {
            continue;
        }
        ProjectivePoint p(std::move(coords));
        if (seen.insert(p).second) {
            points.push_back(std::move(p));
        }
    }
    return PointSet(nvars, std::move(points));
}

namespace {

struct ModTerm {
    std::vector<int> exps;
    std::uint64_t coeff;
};

std::vector<ModTerm> reduce_terms(const GradedPoly& f, std::uint32_t p)
{
    std::vector<ModTerm> out;
    for (const auto& [e, c] : f.terms()) {
        const auto v = ModP::from_rational(c, p).value();
        if (v != 0) {
            out.push_back({e, v});
        }
    }
    return out;
}

std::uint64_t eval_mod(const std::vector<ModTerm>& terms, const std::vector<std::vector<std::uint64_t>>& pw,
                       std::uint32_t p)
{
    std::uint64_t acc = 0;
    for (const auto& t : terms) {
        std::uint64_t v = t.coeff;
        for (std::size_t i = 0; i < t.exps.size() && v != 0; ++i) {
            v = v * pw[i][static_cast<std::size_t>(t.exps[i])] % p;
        }
        acc = (acc + v) % p;
    }
    return acc;
}

} // namespace

SingularProbe probe_singular_points(const GradedPoly& f, const PointSet& declared, std::uint32_t prime,
                                    std::uint64_t max_points)
{
    const Field field = Field::modular(prime);
    SingularProbe out;
    out.prime = field.prime;
    const int nv = f.nvars();
    if (f.degree() < 1) {
        throw std::invalid_argument("probe_singular_points: constant polynomial");
    }

    // |P^{nv-1}(F_p)| = (p^nv - 1)/(p - 1)
    Integer total = 0;
    for (int i = 0; i < nv; ++i) {
        total = total * prime + 1;
    }
    if (total > Integer(static_cast<unsigned long>(max_points))) {
        out.skipped = true;
        out.note = "P^" + std::to_string(nv - 1) + "(F_" + std::to_string(prime) + ") has " + to_string(total) +
                   " points, above the probe limit";
        return out;
    }

    std::vector<std::vector<ModTerm>> partials;
    for (int i = 0; i < nv; ++i) {
        partials.push_back(reduce_terms(partial_derivative(f, i), prime));
    }

    std::set<std::vector<std::uint32_t>> known;
    for (const auto& q : declared) {
        std::vector<std::uint32_t> v;
        bool ok = true;
        for (const auto& c : q.coords()) {
            try {
                v.push_back(static_cast<std::uint32_t>(ModP::from_rational(c, prime).value()));
            } catch (const std::domain_error&) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        const auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
        if (lead == v.end()) {
            continue;
        }
        const auto inv = ModP(*lead, prime).inverse().value();
        for (auto& x : v) {
            x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % prime);
        }
        known.insert(v);
    }

    const auto dim = static_cast<std::uint64_t>(total.get_ui());
    const int deg = f.degree();
    std::uint64_t found = 0;
    std::vector<std::vector<std::uint32_t>> undeclared;
    const auto count = static_cast<std::int64_t>(dim);
#pragma omp parallel
    {
        std::vector<std::vector<std::uint32_t>> local;
        std::uint64_t local_found = 0;
        std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(nv),
                                                   std::vector<std::uint64_t>(static_cast<std::size_t>(deg) + 1));
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            // decode idx: block `lead` holds p^(nv-1-lead) points with x_lead = 1
            auto rem = static_cast<std::uint64_t>(idx);
            int lead = 0;
            std::uint64_t block = 1;
            for (int i = 0; i < nv - 1; ++i) {
                block *= prime;
            }
            while (rem >= block) {
                rem -= block;
                block /= prime;
                ++lead;
            }
            std::vector<std::uint32_t> x(static_cast<std::size_t>(nv), 0);
            x[static_cast<std::size_t>(lead)] = 1;
            for (int i = nv - 1; i > lead; --i) {
                x[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rem % prime);
                rem /= prime;
            }
            for (int i = 0; i < nv; ++i) {
                auto& row = pw[static_cast<std::size_t>(i)];
                row[0] = 1;
                for (int e = 1; e <= deg; ++e) {
                    row[static_cast<std::size_t>(e)] = row[static_cast<std::size_t>(e - 1)] * x[static_cast<std::size_t>(i)] % prime;
                }
            }
            const bool singular = std::all_of(partials.begin(), partials.end(), [&](const std::vector<ModTerm>& t) {
                return eval_mod(t, pw, prime) == 0;
            });
            if (singular) {
                ++local_found;
                if (!known.contains(x)) {
                    local.push_back(std::move(x));
                }
            }
        }
#pragma omp critical
        {
            found += local_found;
            undeclared.insert(undeclared.end(), local.begin(), local.end());
        }
    }
    std::sort(undeclared.begin(), undeclared.end());
    out.points_checked = dim;
    out.singular_found = found;
    out.undeclared = std::move(undeclared);
    return out;
}

} // namespace defectk
