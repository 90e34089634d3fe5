#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "defectk/errors.hpp"
#include "defectk/suites.hpp"

using namespace defectk;

namespace {

constexpr int kUsage = 1;
constexpr int kFailure = 2;

struct Common {
    std::string format = "json";
    std::string field = "qp";
    std::uint64_t seed = kDefaultSeed;
    std::string out;
};

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("DEFECTK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("DEFECTK_SEED", std::string("not an unsigned integer: ") + env);
        }
    }
    return kDefaultSeed;
}

void add_common(CLI::App* sub, Common& c, bool with_seed)
{
    sub->add_option("--format", c.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--field", c.field, "qp (exact rationals) or fp=P");
    sub->add_option("--out", c.out, "write the report here instead of stdout");
    if (with_seed) {
        sub->add_option("--seed", c.seed, "seed for hyperplanes and random points (default: $DEFECTK_SEED or 1)");
    }
}

void emit(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) {
        throw std::runtime_error("cannot write " + c.out);
    }
    f << text;
}

Json read_json(const std::string& path)
{
    std::ifstream f(path);
    if (!f) {
        throw CLI::ValidationError("input", "cannot read " + path);
    }
    return Json::parse(f);
}

std::string csv_cell(const std::string& cell)
{
    if (cell.find_first_of(",\"\n") == std::string::npos) {
        return cell;
    }
    std::string q = "\"";
    for (char ch : cell) {
        q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return q + "\"";
}

std::string csv_line(const std::vector<std::string>& cells)
{
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        s += (i ? "," : "") + csv_cell(cells[i]);
    }
    return s + "\n";
}

std::string md_row(const std::vector<std::string>& cells)
{
    std::string s = "|";
    for (const auto& c : cells) {
        s += " " + c + " |";
    }
    return s + "\n";
}

std::string md_rule(std::size_t n)
{
    std::string s = "|";
    for (std::size_t i = 0; i < n; ++i) {
        s += "---|";
    }
    return s + "\n";
}

std::string table(const std::string& format, const std::vector<std::string>& head,
                  const std::vector<std::vector<std::string>>& rows)
{
    std::string s;
    if (format == "csv") {
        s += csv_line(head);
        for (const auto& r : rows) {
            s += csv_line(r);
        }
    } else {
        s += md_row(head) + md_rule(head.size());
        for (const auto& r : rows) {
            s += md_row(r);
        }
    }
    return s;
}

std::string b2s(bool b) { return b ? "true" : "false"; }

std::string render_report(const DefectReport& r, const std::string& format)
{
    if (format == "json") {
        return to_json(r).dump(2) + "\n";
    }
    std::string s = table(format,
                          {"node_count", "critical_degree", "eval_rank", "defect", "bound_name", "bound_value",
                           "certified"},
                          {{std::to_string(r.node_count), std::to_string(r.critical_degree),
                            std::to_string(r.eval_rank), std::to_string(r.defect), r.bound_name,
                            std::to_string(r.bound_value), b2s(r.certified)}});
    if (!r.trace.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& t : r.trace) {
            rows.push_back({std::to_string(t.degree), std::to_string(t.floor), std::to_string(t.actual), t.rule});
        }
        s += "\n" + table(format, {"degree", "floor", "actual", "rule"}, rows);
    }
    return s;
}

// ------------------------------------------------------------------ expand

int cmd_expand(const std::string& c_text, int d, const Common& c)
{
    Integer value;
    if (value.set_str(c_text, 10) != 0 || value < 0) {
        throw CLI::ValidationError("--c", "expected a nonnegative integer, got " + c_text);
    }
    const auto e = expand(value, d);
    const auto up = upper_growth(value, d);
    const auto down = hyperplane_bound(value, d);
    std::optional<LowerShift> shift;
    if (d >= 2) {
        shift = lower_shift(value, d);
    }
    if (c.format == "json") {
        Json j = to_json(e);
        j["upper_growth"] = integer_json(up);
        j["hyperplane_bound"] = integer_json(down);
        j["lower_shift"] = shift ? Json{{"value", integer_json(shift->value)}, {"strict", shift->strict}} : Json();
        emit(c, j.dump(2) + "\n");
        return 0;
    }
    emit(c, table(c.format, {"c", "d", "eps", "growth", "hyperplane", "lower_shift", "strict"},
                  {{to_string(value), std::to_string(d), e.eps_string(), to_string(up), to_string(down),
                    shift ? to_string(shift->value) : "n/a", shift ? b2s(shift->strict) : "n/a"}}));
    return 0;
}

// ------------------------------------------------------------------ bounds

int cmd_bounds(int d, int n, const Common& c)
{
    Json j{{"d", d}, {"n", n}};
    std::vector<std::vector<std::string>> rows;
    const auto add = [&](const std::string& key, const Json& v, const std::string& shown) {
        j[key] = v;
        rows.push_back({key, shown});
    };
    if (d >= 3) {
        const long p4 = static_cast<long>(d - 1) * (d - 1);
        add("p4_min_nodes", p4, std::to_string(p4));
        add("p4_critical_degree", critical_degree_p4(d), std::to_string(critical_degree_p4(d)));
        const long codim = (static_cast<long>(d) * d + 3L * d - 10) / 2;
        add("plane_family_tangent_codim", codim, std::to_string(codim));
        const auto pnd = ci_pnd(n, d);
        add("p_n_d", integer_json(pnd), to_string(pnd));
        add("highdim_critical_degree", critical_degree_highdim(n, d), std::to_string(critical_degree_highdim(n, d)));
    }
    if (d >= 2) {
        const long ds = static_cast<long>(d) * (2 * d - 1);
        add("double_solid_min_nodes", ds, std::to_string(ds));
        add("double_solid_critical_degree", critical_degree_double_solid(d),
            std::to_string(critical_degree_double_solid(d)));
    }
    if (rows.empty()) {
        throw CLI::ValidationError("--d", "bounds need d >= 2");
    }
    if (c.format == "json") {
        emit(c, j.dump(2) + "\n");
    } else {
        emit(c, table(c.format, {"quantity", "value"}, rows));
    }
    return 0;
}

// ------------------------------------------------------------------ family

std::string render_family(const FamilyAnalysis& a, const std::string& format)
{
    if (format == "json") {
        return to_json(a).dump(2) + "\n";
    }
    const auto& r = a.report;
    std::vector<std::string> head{"family", "d", "n", "seed", "field", "node_count", "critical_degree",
                                  "eval_rank", "defect", "bound_value", "certified", "tangent_codim",
                                  "growth_violations"};
    std::vector<std::string> row{a.family,
                                 std::to_string(a.d),
                                 std::to_string(a.n),
                                 std::to_string(a.seed),
                                 a.field,
                                 std::to_string(r.node_count),
                                 std::to_string(r.critical_degree),
                                 std::to_string(r.eval_rank),
                                 std::to_string(r.defect),
                                 std::to_string(r.bound_value),
                                 b2s(r.certified),
                                 std::to_string(a.tangent_codim),
                                 std::to_string(a.growth_violations())};
    std::string s = table(format, head, {row});
    if (!r.trace.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& t : r.trace) {
            rows.push_back({std::to_string(t.degree), std::to_string(t.floor), std::to_string(t.actual), t.rule});
        }
        s += "\n" + table(format, {"degree", "floor", "actual", "rule"}, rows);
    }
    return s;
}

bool family_ok(const FamilyAnalysis& a)
{
    bool ok = a.growth_violations() == 0;
    if (a.report.bound_name != "none") {
        ok = ok && a.report.certified;
    }
    if (a.gorenstein) {
        ok = ok && a.gorenstein->symmetric && a.gorenstein->contains_ih();
    }
    return ok;
}

struct FamilyArgs {
    std::string name;
    int d = 0;
    int n = 1;
    std::vector<long> a;
    std::vector<long> b;
    bool probe = false;
    std::uint32_t probe_prime = 11;
    bool skip_gorenstein = false;
    std::optional<int> cap;
    std::string replay;
};

int cmd_family(FamilyArgs args, Common c)
{
    if (!args.replay.empty()) {
        const Json j = read_json(args.replay);
        const Json& sc = j.contains("scenario") ? j.at("scenario") : j;
        args.name = sc.at("family").get<std::string>();
        args.d = sc.at("d").get<int>();
        args.n = sc.value("n", 1);
        c.seed = sc.value("seed", c.seed);
        if (j.contains("field")) {
            c.field = j.at("field").get<std::string>();
        }
        if (sc.contains("params") && sc.at("params").contains("a")) {
            args.a = sc.at("params").at("a").get<std::vector<long>>();
            args.b = sc.at("params").at("b").get<std::vector<long>>();
        }
    }
    if (args.name.empty() || args.d == 0) {
        throw CLI::ValidationError("family", "--name and --d are required (or --replay)");
    }
    AnalysisOptions opts;
    opts.field = parse_field(c.field);
    opts.seed = c.seed;
    opts.probe = args.probe;
    opts.probe_prime = args.probe_prime;
    opts.gorenstein = !args.skip_gorenstein;
    opts.degree_cap = args.cap;

    FamilyAnalysis a;
    if (args.name == "plane" || args.name == "double-solid") {
        GridParams p = args.name == "plane" ? GridParams::plane(args.d) : GridParams::double_solid(args.d);
        if (!args.a.empty()) {
            p.a = args.a;
        }
        if (!args.b.empty()) {
            p.b = args.b;
        }
        a = args.name == "plane" ? analyze_plane(p, opts) : analyze_double_solid(p, opts);
    } else if (args.name == "highdim") {
        a = analyze_highdim(HighdimParams::grid(args.n, args.d), opts);
    } else {
        throw CLI::ValidationError("--name", "unknown family " + args.name);
    }
    emit(c, render_family(a, c.format));
    if (a.probe && !a.probe->undeclared.empty()) {
        std::cerr << "warning: " << a.probe->undeclared.size() << " undeclared singular points mod "
                  << a.probe->prime << "\n";
    }
    if (a.probe && a.probe->skipped) {
        std::cerr << "warning: probe skipped: " << a.probe->note << "\n";
    }
    return family_ok(a) ? 0 : kFailure;
}

// ------------------------------------------------------------------ defect

struct DefectArgs {
    std::string points;
    std::optional<int> degree;
    std::optional<int> d;
    std::string kind = "p4";
    int n = 1;
    std::optional<std::size_t> random;
    int nvars = 5;
    std::vector<int> weights;
    int m = 0;
    int form_degree = 0;
};

int cmd_defect(const DefectArgs& args, const Common& c)
{
    const Field field = parse_field(c.field);
    PointSet pts;
    if (!args.points.empty()) {
        pts = point_set_from_json(read_json(args.points));
    } else if (args.random) {
        pts = random_points_control(*args.random, args.nvars, c.seed);
    } else {
        throw CLI::ValidationError("defect", "give --points FILE or --random COUNT");
    }
    int degree = 0;
    if (args.degree) {
        degree = *args.degree;
    } else if (!args.weights.empty()) {
        std::cerr << "note: weighted critical degree is untested; quasi-smoothness is assumed\n";
        degree = critical_degree_weighted(args.weights, args.m, args.form_degree);
    } else if (args.d) {
        if (args.kind == "p4") {
            degree = critical_degree_p4(*args.d);
        } else if (args.kind == "double-solid") {
            degree = critical_degree_double_solid(*args.d);
        } else if (args.kind == "highdim") {
            degree = critical_degree_highdim(args.n, *args.d);
        } else {
            throw CLI::ValidationError("--kind", "expected p4, double-solid or highdim");
        }
    } else {
        throw CLI::ValidationError("defect", "give --degree, --d or --weights");
    }
    const auto r = defect(pts, degree, field);
    emit(c, render_report(r, c.format));
    return 0;
}

// -------------------------------------------------------------- base-locus

int cmd_base_locus(const std::string& input, const std::vector<int>& ci, std::optional<int> degree,
                   std::optional<int> cap, const Common& c)
{
    IdealPiece piece(1, 0);
    if (!input.empty()) {
        const Json j = read_json(input);
        std::vector<GradedPoly> gens;
        for (const auto& g : j.at("generators")) {
            gens.push_back(graded_poly_from_json(g));
        }
        const int k = degree.value_or(j.value("degree", 0));
        piece = generated_piece(gens, k);
    } else if (!ci.empty()) {
        if (!degree) {
            throw CLI::ValidationError("--degree", "required with --ci");
        }
        piece = monomial_ci_pieces(ci, *degree).back();
    } else {
        throw CLI::ValidationError("base-locus", "give --input FILE or --ci DEGREES");
    }
    if (piece.is_zero()) {
        throw CLI::ValidationError("base-locus", "the linear system is zero in that degree");
    }
    const auto b = base_locus_dimension(piece, cap);
    if (c.format == "json") {
        Json j = to_json(b);
        j["nvars"] = piece.nvars();
        j["degree"] = piece.degree();
        j["dim_piece"] = piece.dim();
        emit(c, j.dump(2) + "\n");
    } else {
        emit(c, table(c.format, {"nvars", "degree", "dim", "verdict", "settled_degree"},
                      {{std::to_string(piece.nvars()), std::to_string(piece.degree()), std::to_string(piece.dim()),
                        b.to_string(), std::to_string(b.settled_degree)}}));
    }
    return b.kind == BaseLocus::Kind::Inconclusive ? kFailure : 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::vector<std::string>& suites, std::optional<int> cap, const Common& c)
{
    AnalysisOptions opts;
    opts.field = parse_field(c.field);
    opts.seed = c.seed;
    opts.degree_cap = cap;
    bool all = true;
    Json out = Json::array();
    std::ostringstream text;
    for (const auto& name : suites) {
        const auto res = run_suite(name, opts);
        all = all && res.pass();
        out.push_back(to_json(res));
        for (const auto& check : res.checks) {
            text << (check.pass ? "PASS " : "FAIL ") << res.suite << ": " << check.name << " (" << check.seconds
                 << " s)";
            if (!check.detail.empty()) {
                text << " " << check.detail;
            }
            text << "\n";
            if (!check.pass && !check.instance.is_null()) {
                text << "  replay: " << check.instance.dump() << "\n";
            }
        }
    }
    if (c.format == "json") {
        emit(c, out.dump(2) + "\n");
    } else {
        emit(c, text.str());
    }
    return all ? 0 : kFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hilbert-function tools for defects of nodal hypersurfaces and double solids"};
    app.require_subcommand(1);

    Common ce, cb, cf, cd, cl, cv;
    ce.format = "md";
    cv.format = "md";
    int rc = 0;

    std::string c_text;
    int expand_d = 0;
    auto* expand_cmd = app.add_subcommand("expand", "Macaulay expansion of c in base d with derived operators");
    expand_cmd->add_option("--c", c_text, "nonnegative integer")->required();
    expand_cmd->add_option("--d", expand_d, "base, at least 1")->required()->check(CLI::PositiveNumber);
    add_common(expand_cmd, ce, false);

    int bounds_d = 0;
    int bounds_n = 1;
    auto* bounds_cmd = app.add_subcommand("bounds", "node-count bounds and critical degrees");
    bounds_cmd->add_option("--d", bounds_d, "degree")->required();
    bounds_cmd->add_option("--n", bounds_n, "half-dimension parameter for P^{2n+2}")->check(CLI::PositiveNumber);
    add_common(bounds_cmd, cb, false);

    FamilyArgs fam;
    auto* family_cmd = app.add_subcommand("family", "build a family instance and report defect and certification");
    family_cmd->add_option("--name", fam.name, "plane, double-solid or highdim")
        ->check(CLI::IsMember({"plane", "double-solid", "highdim"}));
    family_cmd->add_option("--d", fam.d, "degree");
    family_cmd->add_option("--n", fam.n, "highdim parameter")->check(CLI::PositiveNumber);
    family_cmd->add_option("--a", fam.a, "grid values (comma separated)")->delimiter(',');
    family_cmd->add_option("--b", fam.b, "grid values (comma separated)")->delimiter(',');
    family_cmd->add_flag("--probe", fam.probe, "sweep P(F_p) for undeclared singular points");
    family_cmd->add_option("--probe-prime", fam.probe_prime, "prime for the sweep");
    family_cmd->add_flag("--no-gorenstein", fam.skip_gorenstein, "skip the ancestor-ideal audit");
    family_cmd->add_option("--degree-cap", fam.cap, "cap for base-locus probes");
    family_cmd->add_option("--replay", fam.replay, "re-run the scenario embedded in a JSON report");
    add_common(family_cmd, cf, true);

    DefectArgs def;
    auto* defect_cmd = app.add_subcommand("defect", "defect of a point set at a critical degree");
    defect_cmd->add_option("--points", def.points, "PointSet JSON file");
    defect_cmd->add_option("--random", def.random, "use COUNT seeded random points");
    defect_cmd->add_option("--nvars", def.nvars, "ambient variables for --random");
    defect_cmd->add_option("--degree", def.degree, "critical degree");
    defect_cmd->add_option("--d", def.d, "hypersurface degree");
    defect_cmd->add_option("--kind", def.kind, "p4, double-solid or highdim");
    defect_cmd->add_option("--n", def.n, "highdim parameter");
    defect_cmd->add_option("--weights", def.weights, "weights of a weighted projective space")->delimiter(',');
    defect_cmd->add_option("--m", def.m, "multiple of the form degree");
    defect_cmd->add_option("--form-degree", def.form_degree, "degree of the form");
    add_common(defect_cmd, cd, true);

    std::string bl_input;
    std::vector<int> bl_ci;
    std::optional<int> bl_degree;
    std::optional<int> bl_cap;
    auto* bl_cmd = app.add_subcommand("base-locus", "base-locus dimension of a linear system via persistence");
    bl_cmd->add_option("--input", bl_input, "JSON {generators: [GradedPoly], degree}");
    bl_cmd->add_option("--ci", bl_ci, "monomial complete intersection degrees")->delimiter(',');
    bl_cmd->add_option("--degree", bl_degree, "degree of the piece");
    bl_cmd->add_option("--degree-cap", bl_cap, "stop with Inconclusive at this degree");
    add_common(bl_cmd, cl, false);

    std::vector<std::string> suites;
    bool every = false;
    std::optional<int> verify_cap;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suites, "macaulay, gotzmann, thmHS, thmDC, highdim, c0")
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_flag("--all", every, "run every suite");
    verify_cmd->add_option("--degree-cap", verify_cap, "cap for base-locus probes");
    add_common(verify_cmd, cv, true);

    try {
        for (Common* c : {&cf, &cd, &cv}) {
            c->seed = default_seed();
        }
        app.parse(argc, argv);
        if (expand_cmd->parsed()) {
            rc = cmd_expand(c_text, expand_d, ce);
        } else if (bounds_cmd->parsed()) {
            rc = cmd_bounds(bounds_d, bounds_n, cb);
        } else if (family_cmd->parsed()) {
            rc = cmd_family(fam, cf);
        } else if (defect_cmd->parsed()) {
            rc = cmd_defect(def, cd);
        } else if (bl_cmd->parsed()) {
            rc = cmd_base_locus(bl_input, bl_ci, bl_degree, bl_cap, cl);
        } else if (verify_cmd->parsed()) {
            if (every) {
                suites = suite_names();
            }
            if (suites.empty()) {
                throw CLI::ValidationError("verify", "give --suite NAME or --all");
            }
            rc = cmd_verify(suites, verify_cap, cv);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    } catch (const AuditFailure& e) {
        std::cerr << "audit failure: " << e.what() << "\n";
        return kFailure;
    } catch (const InconclusiveProbe& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return rc;
}
