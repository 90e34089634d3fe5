#include "defectk/json_io.hpp"

#include <stdexcept>

namespace defectk {

Json integer_json(const Integer& v)
{
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Integer(j.get<long>());
    }
    if (j.is_string()) {
        return Integer(j.get<std::string>());
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json rational_json(const Rational& q)
{
    return Json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer() || j.is_string()) {
        return Rational(integer_from_json(j));
    }
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected [num, den], got " + j.dump());
    }
    const Integer den = integer_from_json(j[1]);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in " + j.dump());
    }
    Rational q(integer_from_json(j[0]), den);
    q.canonicalize();
    return q;
}

Json to_json(const GradedPoly& f)
{
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        terms.push_back(Json::array({e, integer_json(c.get_num()), integer_json(c.get_den())}));
    }
    return Json{{"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", terms}};
}

GradedPoly graded_poly_from_json(const Json& j)
{
    GradedPoly f(j.at("nvars").get<int>(), j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) {
            throw std::invalid_argument("term must be [exponents, num, den]: " + t.dump());
        }
        f.add_term(t[0].get<Exponents>(), rational_from_json(Json::array({t[1], t[2]})));
    }
    return f;
}

Json to_json(const PointSet& points)
{
    Json out = Json::array();
    for (const auto& p : points) {
        Json coords = Json::array();
        for (const auto& c : p.coords()) {
            coords.push_back(rational_json(c));
        }
        out.push_back(coords);
    }
    return out;
}

PointSet point_set_from_json(const Json& j)
{
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("point set must be a nonempty array");
    }
    std::vector<ProjectivePoint> pts;
    for (const auto& p : j) {
        std::vector<Rational> coords;
        for (const auto& c : p) {
            coords.push_back(rational_from_json(c));
        }
        pts.emplace_back(std::move(coords));
    }
    const int nvars = static_cast<int>(pts.front().size());
    return PointSet(nvars, std::move(pts));
}

Json to_json(const HilbertProfile& h) { return Json(h); }

HilbertProfile profile_from_json(const Json& j)
{
    auto h = j.get<HilbertProfile>();
    for (long v : h) {
        if (v < 0) {
            throw std::invalid_argument("Hilbert profile entries must be nonnegative");
        }
    }
    return h;
}

Json to_json(const DefectReport& r)
{
    Json trace = Json::array();
    for (const auto& s : r.trace) {
        trace.push_back({{"degree", s.degree}, {"floor", s.floor}, {"actual", s.actual}, {"rule", s.rule}});
    }
    return Json{{"node_count", r.node_count},   {"critical_degree", r.critical_degree},
                {"eval_rank", r.eval_rank},     {"defect", r.defect},
                {"bound_name", r.bound_name},   {"bound_value", r.bound_value},
                {"certified", r.certified},     {"bound_met", r.bound_met},
                {"bound_tight", r.bound_tight}, {"trace", trace}};
}

DefectReport defect_report_from_json(const Json& j)
{
    DefectReport r;
    r.node_count = j.at("node_count").get<long>();
    r.critical_degree = j.at("critical_degree").get<int>();
    r.eval_rank = j.at("eval_rank").get<long>();
    r.defect = j.at("defect").get<long>();
    r.bound_name = j.at("bound_name").get<std::string>();
    r.bound_value = j.at("bound_value").get<long>();
    r.certified = j.at("certified").get<bool>();
    r.bound_met = j.value("bound_met", false);
    r.bound_tight = j.value("bound_tight", false);
    for (const auto& s : j.at("trace")) {
        r.trace.push_back({s.at("degree").get<int>(), s.at("floor").get<long>(), s.at("actual").get<long>(),
                           s.at("rule").get<std::string>()});
    }
    return r;
}

Json to_json(const MacaulayExpansion& e)
{
    return Json{{"c", integer_json(e.c)}, {"d", e.d}, {"eps", e.eps}};
}

Json to_json(const BaseLocus& b)
{
    Json out{{"verdict", b.to_string()}, {"settled_degree", b.settled_degree}};
    if (b.kind == BaseLocus::Kind::Dim) {
        out["dim"] = b.dim;
    }
    return out;
}

Json to_json(const std::vector<GrowthViolation>& v)
{
    Json out = Json::array();
    for (const auto& g : v) {
        out.push_back({{"k", g.k}, {"h_k", g.h_k}, {"h_next", g.h_next}, {"bound", integer_json(g.bound)}});
    }
    return out;
}

Json to_json(const SingularProbe& p)
{
    Json out{{"prime", p.prime},
             {"points_checked", p.points_checked},
             {"singular_found", p.singular_found},
             {"undeclared", p.undeclared},
             {"skipped", p.skipped}};
    if (!p.note.empty()) {
        out["note"] = p.note;
    }
    return out;
}

Json to_json(const GridParams& p) { return Json{{"d", p.d}, {"a", p.a}, {"b", p.b}}; }

Json to_json(const HighdimParams& p) { return Json{{"n", p.n}, {"d", p.d}, {"values", p.values}}; }

} // namespace defectk
