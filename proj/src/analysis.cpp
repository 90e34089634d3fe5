#include "defectk/analysis.hpp"

#include <stdexcept>

#include "defectk/errors.hpp"

namespace defectk {

GorensteinAudit gorenstein_audit(const PointSet& nodes, const GradedPoly& ell, const HilbertProfile& h_ih, int n_degree,
                                 int strict_from, int bpf_degree, Field field, std::optional<int> degree_cap)
{
    const HyperplaneChart chart(ell);
    GorensteinAudit g;
    g.socle_degree = n_degree;
    g.strict_from = strict_from;
    g.bpf_degree = bpf_degree;

    const Functional phi = socle_functional(nodes, chart, n_degree);
    g.profile = ancestor_profile(phi, field);
    g.symmetric = true;
    for (int e = 0; e <= n_degree; ++e) {
        g.symmetric = g.symmetric && g.profile[static_cast<std::size_t>(e)] ==
                                         g.profile[static_cast<std::size_t>(n_degree - e)];
    }

    g.restriction_matches = h_ih.size() > static_cast<std::size_t>(n_degree);
    for (int e = 0; e <= n_degree; ++e) {
        const IdealPiece ih = restricted_piece(nodes, chart, e);
        if (g.restriction_matches && ih.codim() != h_ih[static_cast<std::size_t>(e)]) {
            g.restriction_matches = false;
        }
        if (!gorenstein_ancestor(phi, e).contains(ih)) {
            g.containment_failures.push_back(e);
        }
    }

    g.bpf = base_locus_dimension(gorenstein_ancestor(phi, bpf_degree), degree_cap);
    g.corgreen = g.bpf.kind == BaseLocus::Kind::Empty && corgreen_check(g.profile, strict_from, bpf_degree);
    return g;
}

std::size_t FamilyAnalysis::growth_violations() const
{
    std::size_t total = 0;
    for (const auto& [name, v] : growth) {
        total += v.size();
    }
    return total;
}

Json FamilyAnalysis::manifest() const
{
    return Json{{"family", family}, {"d", d}, {"n", n}, {"params", params}, {"seed", seed}};
}

namespace {

void finish(FamilyAnalysis& a, const AnalysisOptions& opts)
{
    a.growth.emplace_back("points", macaulay_growth_audit(a.h_points));
    a.growth.emplace_back("restricted", macaulay_growth_audit(a.h_ih));
    if (a.gorenstein) {
        a.growth.emplace_back("ancestor", macaulay_growth_audit(a.gorenstein->profile));
    }
    if (opts.probe) {
        a.probe = probe_singular_points(a.f, a.nodes, opts.probe_prime);
    }
}

void check_telescoping(const DefectReport& certified, const DefectReport& direct)
{
    if (certified.eval_rank != direct.eval_rank) {
        throw AuditFailure("restricted profile sums to " + std::to_string(certified.eval_rank) +
                           " but the evaluation rank is " + std::to_string(direct.eval_rank));
    }
}

} // namespace

FamilyAnalysis analyze_plane(const GridParams& params, const AnalysisOptions& opts)
{
    const auto x = plane_family(params, opts.field);
    const int d = params.d;
    const int top = 2 * d - 4;

    FamilyAnalysis a;
    a.family = "plane";
    a.d = d;
    a.params = to_json(params);
    a.seed = opts.seed;
    a.field = opts.field.name();
    a.f = x.f;
    a.nodes = x.nodes;
    a.verified_nodes = static_cast<long>(x.audit.size());
    a.h_points = points_profile(a.nodes, top, opts.field);
    a.ell = draw_generic_hyperplane(a.nodes, opts.seed);
    a.h_ih = difference_profile(a.h_points, a.nodes, a.ell);
    a.report = certify_min_nodes_p4(d, a.h_ih, a.verified_nodes);
    check_telescoping(a.report, defect(a.nodes, critical_degree_p4(d), opts.field));
    a.tangent_codim = tangent_codim(a.nodes, d, opts.field);
    a.expected_tangent_codim = Integer((d * d + 3 * d - 10) / 2);
    if (opts.gorenstein) {
        a.gorenstein = gorenstein_audit(a.nodes, a.ell, a.h_ih, top, d - 2, d - 1, opts.field, opts.degree_cap);
    }
    finish(a, opts);
    return a;
}

FamilyAnalysis analyze_double_solid(const GridParams& params, const AnalysisOptions& opts)
{
    const auto x = double_solid_family(params, opts.field);
    const int d = params.d;
    const int top = 3 * d - 3;

    FamilyAnalysis a;
    a.family = "double-solid";
    a.d = d;
    a.params = to_json(params);
    a.seed = opts.seed;
    a.field = opts.field.name();
    a.f = x.f;
    a.nodes = x.nodes;
    a.verified_nodes = static_cast<long>(x.audit.size());
    a.h_points = points_profile(a.nodes, top, opts.field);
    a.ell = draw_generic_hyperplane(a.nodes, opts.seed);
    a.h_ih = difference_profile(a.h_points, a.nodes, a.ell);
    a.report = certify_min_nodes_double_solid(d, a.h_ih, a.verified_nodes);
    check_telescoping(a.report, defect(a.nodes, critical_degree_double_solid(d), opts.field));
    a.tangent_codim = tangent_codim(a.nodes, 2 * d, opts.field);
    if (opts.gorenstein) {
        a.gorenstein =
            gorenstein_audit(a.nodes, a.ell, a.h_ih, top, 2 * d - 2, 2 * d - 1, opts.field, opts.degree_cap);
    }
    finish(a, opts);
    return a;
}

FamilyAnalysis analyze_highdim(const HighdimParams& params, const AnalysisOptions& opts)
{
    const auto x = ci_family_highdim(params, opts.field);
    const int d = params.d;
    const int crit = critical_degree_highdim(params.n, d);

    FamilyAnalysis a;
    a.family = "highdim";
    a.d = d;
    a.n = params.n;
    a.params = to_json(params);
    a.seed = opts.seed;
    a.field = opts.field.name();
    a.f = x.f;
    a.nodes = x.nodes;
    a.verified_nodes = static_cast<long>(x.audit.size());
    a.h_points = points_profile(a.nodes, crit + 1, opts.field);
    a.ell = draw_generic_hyperplane(a.nodes, opts.seed);
    a.h_ih = difference_profile(a.h_points, a.nodes, a.ell);
    a.report = defect(a.nodes, crit, opts.field);
    a.tangent_codim = tangent_codim(a.nodes, d, opts.field);
    a.expected_tangent_codim = ci_pnd(params.n, d);
    finish(a, opts);
    return a;
}

FamilyAnalysis analyze_family(const std::string& name, int d, int n, const AnalysisOptions& opts)
{
    if (name == "plane") {
        return analyze_plane(GridParams::plane(d), opts);
    }
    if (name == "double-solid") {
        return analyze_double_solid(GridParams::double_solid(d), opts);
    }
    if (name == "highdim") {
        return analyze_highdim(HighdimParams::grid(n, d), opts);
    }
    throw std::invalid_argument("unknown family '" + name + "' (expected plane, double-solid or highdim)");
}

Json to_json(const GorensteinAudit& g)
{
    return Json{{"socle_degree", g.socle_degree},
                {"profile", g.profile},
                {"symmetric", g.symmetric},
                {"restriction_matches", g.restriction_matches},
                {"contains_ih", g.contains_ih()},
                {"containment_failures", g.containment_failures},
                {"bpf_degree", g.bpf_degree},
                {"bpf", to_json(g.bpf)},
                {"strict_from", g.strict_from},
                {"corgreen", g.corgreen}};
}

Json to_json(const FamilyAnalysis& a)
{
    Json growth = Json::object();
    for (const auto& [name, v] : a.growth) {
        growth[name] = to_json(v);
    }
    Json out{{"scenario", a.manifest()},
             {"field", a.field},
             {"f", to_json(a.f)},
             {"nodes", to_json(a.nodes)},
             {"verified_nodes", a.verified_nodes},
             {"h_points", a.h_points},
             {"hyperplane", to_json(a.ell)},
             {"h_ih", a.h_ih},
             {"report", to_json(a.report)},
             {"tangent_codim", a.tangent_codim}};
    if (a.expected_tangent_codim) {
        out["expected_tangent_codim"] = integer_json(*a.expected_tangent_codim);
    }
    if (a.gorenstein) {
        out["gorenstein"] = to_json(*a.gorenstein);
    }
    out["growth_violations"] = growth;
    if (a.probe) {
        out["probe"] = to_json(*a.probe);
    }
    return out;
}

} // namespace defectk
