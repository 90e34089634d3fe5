#include "defectk/suites.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace defectk {

bool SuiteResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"macaulay", "gotzmann", "thmHS", "thmDC", "highdim", "c0"};
    return names;
}

namespace {

// Runs body, turning exceptions into a failed check.
CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body)
{
    CheckResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

void enumerate_eps(int i, long cap_eps, const Integer& partial, long max_c, std::vector<long>& eps,
                   std::vector<std::vector<std::vector<long>>>& hits)
{
    if (i == 0) {
        hits[partial.get_ui()].push_back(eps);
        return;
    }
    // eps_i ranges over -1..cap_eps while the running sum stays within max_c
    for (long e = -1; e <= cap_eps; ++e) {
        const Integer next = partial + binom(i + e, i);
        if (next > max_c) {
            break;
        }
        eps.push_back(e);
        enumerate_eps(i - 1, e, next, max_c, eps, hits);
        eps.pop_back();
    }
}

} // namespace

bool brute_force_expansions_agree(long max_c, int d, std::string* failure)
{
    std::vector<std::vector<std::vector<long>>> hits(static_cast<std::size_t>(max_c) + 1);
    std::vector<long> eps;
    enumerate_eps(d, max_c, Integer(0), max_c, eps, hits);
    for (long c = 0; c <= max_c; ++c) {
        const auto& h = hits[static_cast<std::size_t>(c)];
        const auto e = expand(Integer(c), d);
        if (h.size() != 1 || e.eps != h.front() || !e.well_formed() || e.reconstruct() != c) {
            if (failure) {
                *failure = "c=" + std::to_string(c) + " d=" + std::to_string(d) + ": " +
                           std::to_string(h.size()) + " brute-force expansions, expand gave " + e.eps_string();
            }
            return false;
        }
    }
    return true;
}

std::vector<std::pair<std::string, BaseLocus>> reference_base_loci(std::optional<int> degree_cap)
{
    std::vector<std::pair<std::string, BaseLocus>> out;
    const auto v5 = [](int i) { return GradedPoly::variable(5, i); };
    out.emplace_back("(x0,x1) in P^4", base_locus_dimension(generated_piece({v5(0), v5(1)}, 1), degree_cap));
    out.emplace_back("S_2 in P^3", base_locus_dimension(IdealPiece::full(4, 2), degree_cap));
    const auto v4 = [](int i) { return GradedPoly::variable(4, i); };
    const auto q1 = multiply(v4(0), v4(1)) - multiply(v4(2), v4(3));
    const auto q2 = multiply(v4(0), v4(0)) + multiply(v4(1), v4(1)) - multiply(v4(2), v4(2)) - multiply(v4(3), v4(3));
    out.emplace_back("two quadrics in P^3", base_locus_dimension(generated_piece({q1, q2}, 2), degree_cap));
    return out;
}

std::vector<IdealPiece> monomial_ci_pieces(const std::vector<int>& degrees, int top)
{
    const int nv = static_cast<int>(degrees.size());
    std::vector<GradedPoly> gens;
    for (int i = 0; i < nv; ++i) {
        gens.push_back(power(GradedPoly::variable(nv, i), degrees[static_cast<std::size_t>(i)]));
    }
    std::vector<IdealPiece> pieces;
    for (int t = 0; t <= top; ++t) {
        pieces.push_back(generated_piece(gens, t));
    }
    return pieces;
}

namespace {

std::string join(const HilbertProfile& h)
{
    std::string s;
    for (std::size_t i = 0; i < h.size(); ++i) {
        s += (i ? "," : "") + std::to_string(h[i]);
    }
    return s;
}

SuiteResult suite_macaulay()
{
    SuiteResult s{"macaulay", {}};
    s.checks.push_back(timed("expansions match brute force, c<=3000, d<=12", [](CheckResult& r) {
        r.pass = true;
        for (int d = 1; d <= 12 && r.pass; ++d) {
            std::string why;
            if (!brute_force_expansions_agree(3000, d, &why)) {
                r.pass = false;
                r.detail = why;
                r.instance = Json{{"command", "expand"}, {"d", d}};
            }
        }
    }));
    s.checks.push_back(timed("growth bullets for c<=2d+1, d in [2,50]", [](CheckResult& r) {
        r.pass = true;
        for (int d = 2; d <= 50 && r.pass; ++d) {
            for (long c = 0; c <= 2L * d + 1; ++c) {
                const long want = c <= d ? c : (c <= 2L * d ? c + 1 : c + 2);
                if (upper_growth(Integer(c), d) != want) {
                    r.pass = false;
                    r.detail = "upper_growth(" + std::to_string(c) + "," + std::to_string(d) + ")";
                    r.instance = Json{{"command", "expand"}, {"c", c}, {"d", d}};
                    break;
                }
            }
        }
    }));
    s.checks.push_back(timed("operators monotone in c, c<=3000, d<=12", [](CheckResult& r) {
        r.pass = true;
        for (int d = 1; d <= 12 && r.pass; ++d) {
            Integer up = 0;
            Integer down = 0;
            for (long c = 0; c <= 3000; ++c) {
                const auto u = upper_growth(Integer(c), d);
                const auto h = hyperplane_bound(Integer(c), d);
                if (u < up || h < down || u < c) {
                    r.pass = false;
                    r.detail = "c=" + std::to_string(c) + " d=" + std::to_string(d);
                    break;
                }
                up = u;
                down = h;
            }
        }
    }));
    s.checks.push_back(timed("Gotzmann polynomial hits c and c^<d>, c<=300, d<=8", [](CheckResult& r) {
        r.pass = true;
        for (int d = 1; d <= 8 && r.pass; ++d) {
            for (long c = 1; c <= 300; ++c) {
                const auto p = gotzmann_polynomial(Integer(c), d);
                if (p(Rational(d)) != c || p(Rational(d + 1)) != upper_growth(Integer(c), d) ||
                    !p.integer_valued(2L * d + 10)) {
                    r.pass = false;
                    r.detail = "c=" + std::to_string(c) + " d=" + std::to_string(d) + " p=" + p.to_string();
                    break;
                }
            }
        }
    }));
    return s;
}

SuiteResult suite_gotzmann(const AnalysisOptions& opts)
{
    SuiteResult s{"gotzmann", {}};
    s.checks.push_back(timed("reference base loci Dim(2), Empty, Dim(1)", [&](CheckResult& r) {
        const auto got = reference_base_loci(opts.degree_cap);
        const std::vector<BaseLocus::Kind> kinds{BaseLocus::Kind::Dim, BaseLocus::Kind::Empty, BaseLocus::Kind::Dim};
        const std::vector<long> dims{2, -1, 1};
        r.pass = true;
        for (std::size_t i = 0; i < got.size(); ++i) {
            r.detail += (i ? "; " : "") + got[i].first + " -> " + got[i].second.to_string();
            r.pass = r.pass && got[i].second.kind == kinds[i] && got[i].second.dim == dims[i];
        }
    }));
    s.checks.push_back(timed("linear subspaces of dim 0,1,2 in P^4, degrees 1..3", [&](CheckResult& r) {
        r.pass = true;
        for (int m = 0; m <= 2; ++m) {
            std::vector<GradedPoly> gens;
            for (int i = 0; i < 4 - m; ++i) {
                gens.push_back(GradedPoly::variable(5, i));
            }
            for (int e = 1; e <= 3; ++e) {
                const auto b = base_locus_dimension(generated_piece(gens, e), opts.degree_cap);
                if (b.kind != BaseLocus::Kind::Dim || b.dim != m) {
                    r.pass = false;
                    r.detail += "m=" + std::to_string(m) + " e=" + std::to_string(e) + " -> " + b.to_string() + "; ";
                }
            }
        }
    }));
    for (const auto& degrees : {std::vector<int>{1, 1, 1, 3, 3}, std::vector<int>{1, 2, 5, 6}}) {
        std::string label = "lemdims equality for CI(";
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            label += (i ? "," : "") + std::to_string(degrees[i]);
        }
        label += ")";
        s.checks.push_back(timed(label, [&](CheckResult& r) {
            const int top = std::accumulate(degrees.begin(), degrees.end(), 0) - static_cast<int>(degrees.size());
            const int n = static_cast<int>(degrees.size()) - 1;
            const auto res = lemdims_check(monomial_ci_pieces(degrees, top + 1), top, n, opts.degree_cap.value_or(40));
            r.pass = res.satisfied && res.sum == res.bound;
            r.detail = "sum " + std::to_string(res.sum) + ", bound " + std::to_string(res.bound);
        }));
    }
    return s;
}

CheckResult family_check(const FamilyAnalysis& a, long expected_nodes)
{
    CheckResult r;
    r.name = a.family + " d=" + std::to_string(a.d) + (a.family == "highdim" ? " n=" + std::to_string(a.n) : "");
    std::vector<std::string> bad;
    const auto want = [&](bool ok, const std::string& what) {
        if (!ok) {
            bad.push_back(what);
        }
    };
    want(a.verified_nodes == expected_nodes, "node count " + std::to_string(a.verified_nodes));
    want(a.report.defect == 1, "defect " + std::to_string(a.report.defect));
    if (a.report.bound_name != "none") {
        want(a.report.certified, "certification floors");
        want(a.report.bound_tight, "bound " + std::to_string(a.report.bound_value) + " not met with equality");
    }
    if (a.expected_tangent_codim) {
        want(Integer(a.tangent_codim) == *a.expected_tangent_codim,
             "tangent codim " + std::to_string(a.tangent_codim));
    }
    if (a.gorenstein) {
        const auto& g = *a.gorenstein;
        want(g.symmetric, "ancestor profile not symmetric");
        want(g.contains_ih(), "I_H not inside I'");
        want(g.restriction_matches, "restricted ideal disagrees with difference profile");
        want(g.bpf.kind == BaseLocus::Kind::Empty, "I' not base point free: " + g.bpf.to_string());
        want(g.corgreen, "strict decrease fails");
    }
    want(a.growth_violations() == 0, std::to_string(a.growth_violations()) + " growth violations");
    if (a.probe) {
        want(a.probe->undeclared.empty(), "undeclared singular points mod " + std::to_string(a.probe->prime));
    }
    r.pass = bad.empty();
    r.detail = "h_ih=" + join(a.h_ih);
    for (const auto& b : bad) {
        r.detail += "; " + b;
    }
    if (!r.pass) {
        r.instance = a.manifest();
    }
    return r;
}

CheckResult run_family(const std::string& name, int d, int n, long expected_nodes, const AnalysisOptions& opts)
{
    CheckResult out;
    auto r = timed(name + " d=" + std::to_string(d), [&](CheckResult& c) {
        const double keep = c.seconds;
        c = family_check(analyze_family(name, d, n, opts), expected_nodes);
        c.seconds = keep;
    });
    if (!r.pass && r.instance.is_null()) {
        r.instance = Json{{"family", name}, {"d", d}, {"n", n}, {"seed", opts.seed}};
    }
    return r;
}

SuiteResult suite_thm_hs(const AnalysisOptions& opts)
{
    SuiteResult s{"thmHS", {}};
    for (int d = 3; d <= 8; ++d) {
        s.checks.push_back(run_family("plane", d, 1, static_cast<long>(d - 1) * (d - 1), opts));
    }
    for (int d = 4; d <= 5; ++d) {
        s.checks.push_back(timed("100 random sets of (d-1)^2-1 points, d=" + std::to_string(d), [&](CheckResult& r) {
            const auto count = static_cast<std::size_t>((d - 1) * (d - 1) - 1);
            long defective = 0;
            for (std::uint64_t t = 0; t < 100; ++t) {
                const auto pts = random_points_control(count, 5, opts.seed + t);
                const auto rep = defect(pts, critical_degree_p4(d), opts.field);
                if (rep.defect != 0) {
                    ++defective;
                    if (r.instance.is_null()) {
                        r.instance = Json{{"command", "defect"}, {"random", count}, {"seed", opts.seed + t}};
                    }
                }
            }
            r.pass = defective == 0;
            r.detail = std::to_string(100 - defective) + "/100 with defect 0";
        }));
    }
    return s;
}

SuiteResult suite_thm_dc(const AnalysisOptions& opts)
{
    SuiteResult s{"thmDC", {}};
    for (int d = 2; d <= 5; ++d) {
        s.checks.push_back(run_family("double-solid", d, 1, static_cast<long>(d) * (2 * d - 1), opts));
    }
    return s;
}

SuiteResult suite_highdim(const AnalysisOptions& opts)
{
    SuiteResult s{"highdim", {}};
    for (int d = 3; d <= 4; ++d) {
        s.checks.push_back(run_family("highdim", d, 2, static_cast<long>(d - 1) * (d - 1) * (d - 1), opts));
    }
    s.checks.push_back(timed("n=1 agrees with the plane family, d=4", [&](CheckResult& r) {
        AnalysisOptions quick = opts;
        quick.gorenstein = false;
        const auto hi = analyze_highdim(HighdimParams::grid(1, 4), quick);
        const auto pl = analyze_plane(GridParams::plane(4), quick);
        r.pass = hi.f == pl.f && hi.nodes == pl.nodes && hi.report.defect == pl.report.defect;
        r.detail = "defect " + std::to_string(hi.report.defect) + " vs " + std::to_string(pl.report.defect);
    }));
    return s;
}

SuiteResult suite_c0()
{
    SuiteResult s{"c0", {}};
    s.checks.push_back(timed("c0 expansion identity, n in [16,24], d in [5,30]", [](CheckResult& r) {
        r.pass = true;
        for (int n = 16; n <= 24; ++n) {
            for (int d = 5; d <= 30; ++d) {
                if (!c0_expansion_identity(n, d)) {
                    r.pass = false;
                    r.detail += "n=" + std::to_string(n) + " d=" + std::to_string(d) + "; ";
                }
            }
        }
    }));
    return s;
}

} // namespace

SuiteResult run_suite(const std::string& name, const AnalysisOptions& opts)
{
    if (name == "macaulay") {
        return suite_macaulay();
    }
    if (name == "gotzmann") {
        return suite_gotzmann(opts);
    }
    if (name == "thmHS") {
        return suite_thm_hs(opts);
    }
    if (name == "thmDC") {
        return suite_thm_dc(opts);
    }
    if (name == "highdim") {
        return suite_highdim(opts);
    }
    if (name == "c0") {
        return suite_c0();
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

Json to_json(const CheckResult& c)
{
    Json out{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}};
    if (!c.instance.is_null()) {
        out["instance"] = c.instance;
    }
    return out;
}

Json to_json(const SuiteResult& s)
{
    Json checks = Json::array();
    for (const auto& c : s.checks) {
        checks.push_back(to_json(c));
    }
    return Json{{"suite", s.suite}, {"pass", s.pass()}, {"checks", checks}};
}

} // namespace defectk
