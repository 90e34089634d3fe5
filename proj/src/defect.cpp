#include "defectk/defect.hpp"

#include <numeric>
#include <stdexcept>

#include "defectk/errors.hpp"

namespace defectk {

bool verify_singular(const GradedPoly& f, const ProjectivePoint& p)
{
    if (p.size() != static_cast<std::size_t>(f.nvars())) {
        throw std::invalid_argument("verify_singular: point " + p.to_string() + " not in the ring of f");
    }
    if (f.degree() == 0) {
        return f.is_zero();
    }
    for (int i = 0; i < f.nvars(); ++i) {
        if (evaluate(partial_derivative(f, i), p) != 0) {
            return false;
        }
    }
    return true;
}

RationalMatrix affine_hessian(const GradedPoly& f, const ProjectivePoint& p)
{
    if (f.degree() < 2) {
        throw std::invalid_argument("affine_hessian: degree below 2");
    }
    const auto c = p.chart();
    std::vector<int> vars;
    for (int i = 0; i < f.nvars(); ++i) {
        if (static_cast<std::size_t>(i) != c) {
            vars.push_back(i);
        }
    }
    RationalMatrix h(vars.size(), vars.size());
    for (std::size_t a = 0; a < vars.size(); ++a) {
        const auto fa = partial_derivative(f, vars[a]);
        for (std::size_t b = a; b < vars.size(); ++b) {
            const Rational v = fa.degree() == 0 ? Rational(0) : evaluate(partial_derivative(fa, vars[b]), p);
            h(a, b) = v;
            h(b, a) = v;
        }
    }
    return h;
}

namespace {

NodeRecord check_node(const GradedPoly& f, const ProjectivePoint& p, Field field)
{
    NodeRecord rec{p, verify_singular(f, p), false, "Q"};
    if (!rec.singular) {
        return rec;
    }
    const auto h = affine_hessian(f, p);
    if (!field.is_rational()) {
        if (auto hp = reduce_mod(h, field.prime)) {
            if (!determinant(*hp).is_zero()) {
                rec.node = true;
                rec.field = field.name();
                return rec;
            }
        }
    }
    rec.node = determinant(h) != 0;
    return rec;
}

} // namespace

bool verify_node(const GradedPoly& f, const ProjectivePoint& p, Field field)
{
    const auto rec = check_node(f, p, field);
    if (!rec.singular) {
        throw std::invalid_argument("verify_node: " + p.to_string() + " is not a singular point");
    }
    return rec.node;
}

std::vector<NodeRecord> audit_nodes(const GradedPoly& f, const PointSet& nodes, Field field)
{
    std::vector<NodeRecord> out(nodes.size(), NodeRecord{ProjectivePoint({Rational(1)}), false, false, ""});
    const auto n = static_cast<std::ptrdiff_t>(nodes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = check_node(f, nodes[static_cast<std::size_t>(i)], field);
    }
    return out;
}

namespace {

std::vector<NodeRecord> audit_or_throw(const GradedPoly& f, const PointSet& nodes, Field field)
{
    if (nodes.nvars() != f.nvars()) {
        throw std::invalid_argument("node set and polynomial live in different rings");
    }
    auto audit = audit_nodes(f, nodes, field);
    for (const auto& rec : audit) {
        if (!rec.singular) {
            throw AuditFailure("declared node " + rec.point.to_string() + " is a smooth point");
        }
        if (!rec.node) {
            throw AuditFailure("declared node " + rec.point.to_string() + " is not an A1 singularity");
        }
    }
    return audit;
}

} // namespace

NodalHypersurface make_nodal_hypersurface(GradedPoly f, PointSet nodes, Field field)
{
    auto audit = audit_or_throw(f, nodes, field);
    const int nvars = f.nvars();
    const int d = f.degree();
    return NodalHypersurface{nvars, d, std::move(f), std::move(nodes), std::move(audit)};
}

DoubleSolid make_double_solid(GradedPoly f, PointSet nodes, Field field)
{
    if (f.nvars() != 4 || f.degree() % 2 != 0 || f.degree() < 2) {
        throw std::invalid_argument("double solid: branch form must have even degree in 4 variables");
    }
    auto audit = audit_or_throw(f, nodes, field);
    const int d = f.degree() / 2;
    return DoubleSolid{d, std::move(f), std::move(nodes), std::move(audit)};
}

int critical_degree_p4(int d) { return 2 * d - 5; }
int critical_degree_double_solid(int d) { return 3 * d - 4; }
int critical_degree_highdim(int n, int d) { return (n + 1) * d - (2 * n + 3); }

int critical_degree_weighted(const std::vector<int>& weights, int m, int degree)
{
    return m * degree - std::accumulate(weights.begin(), weights.end(), 0);
}

DefectReport defect(const PointSet& nodes, int critical_degree, Field field)
{
    if (nodes.empty()) {
        throw std::invalid_argument("defect: empty node set");
    }
    DefectReport r;
    r.node_count = static_cast<long>(nodes.size());
    r.critical_degree = critical_degree;
    r.eval_rank = points_hilbert(nodes, critical_degree, field);
    r.defect = r.node_count - r.eval_rank;
    return r;
}

namespace {

struct Floor {
    long value;
    const char* rule;
};

template <typename FloorFn>
DefectReport certify(const char* name, int top, int critical, const HilbertProfile& h, long node_count, FloorFn floor)
{
    if (h.size() <= static_cast<std::size_t>(top)) {
        throw std::invalid_argument(std::string(name) + ": profile shorter than degree " + std::to_string(top));
    }
    if (h[static_cast<std::size_t>(top)] == 0) {
        throw std::domain_error(std::string(name) + ": h_IH vanishes at degree " + std::to_string(top) +
                                ", nothing to certify");
    }
    DefectReport r;
    r.bound_name = name;
    r.node_count = node_count;
    r.critical_degree = critical;
    r.certified = true;
    for (int k = 0; k <= top; ++k) {
        const auto f = floor(k);
        const long actual = h[static_cast<std::size_t>(k)];
        r.trace.push_back({k, f.value, actual, f.rule});
        r.bound_value += f.value;
        r.certified = r.certified && actual >= f.value;
        if (k <= critical) {
            r.eval_rank += actual;   // telescoping: sum of h_IH up to k is h_I(k)
        }
    }
    r.defect = r.node_count - r.eval_rank;
    r.bound_met = r.node_count >= r.bound_value;
    r.bound_tight = r.node_count == r.bound_value;
    return r;
}

} // namespace

DefectReport certify_min_nodes_p4(int d, const HilbertProfile& h_ih, long node_count)
{
    if (d < 3) {
        throw std::invalid_argument("certify_min_nodes_p4: d must be at least 3");
    }
    return certify("p4_min_nodes", 2 * d - 4, critical_degree_p4(d), h_ih, node_count, [d](int k) {
        if (k <= d - 2) {
            return Floor{k + 1L, "symmetry"};
        }
        return Floor{2L * d - 3 - k, "strict-decrease"};
    });
}

DefectReport certify_min_nodes_double_solid(int d, const HilbertProfile& h_ih, long node_count)
{
    if (d < 2) {
        throw std::invalid_argument("certify_min_nodes_double_solid: d must be at least 2");
    }
    return certify("double_solid_min_nodes", 3 * d - 3, critical_degree_double_solid(d), h_ih, node_count,
                   [d](int k) {
                       if (k <= d - 1) {
                           return Floor{k + 1L, "symmetry"};
                       }
                       if (k <= 2 * d - 2) {
                           return Floor{static_cast<long>(d), "macaulay"};
                       }
                       return Floor{3L * d - 2 - k, "strict-decrease"};
                   });
}

long tangent_codim(const PointSet& nodes, int d, Field field)
{
    if (nodes.empty()) {
        throw std::invalid_argument("tangent_codim: empty node set");
    }
    return points_hilbert(nodes, d, field);
}

} // namespace defectk
