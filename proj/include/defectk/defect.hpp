#pragma once

#include <string>
#include <vector>

#include "defectk/ideals.hpp"
#include "defectk/poly.hpp"

namespace defectk {

/// All partial derivatives of f vanish at p.
bool verify_singular(const GradedPoly& f, const ProjectivePoint& p);

/// Second partials of f at p, with the chart variable of p removed.
RationalMatrix affine_hessian(const GradedPoly& f, const ProjectivePoint& p);

/// A1 check: p is singular and the affine Hessian is nonsingular. Over F_p a
/// zero determinant (or a denominator divisible by p) is re-checked over Q.
/// Throws std::invalid_argument if p is not a singular point.
bool verify_node(const GradedPoly& f, const ProjectivePoint& p, Field field = {});

struct NodeRecord {
    ProjectivePoint point;
    bool singular = false;
    bool node = false;
    std::string field;   // backend that settled the Hessian test
};

/// Per-node audit, parallel over nodes. Never throws on a failed node.
std::vector<NodeRecord> audit_nodes(const GradedPoly& f, const PointSet& nodes, Field field = {});

struct NodalHypersurface {
    int nvars = 0;
    int d = 0;
    GradedPoly f;
    PointSet nodes;
    std::vector<NodeRecord> audit;
};

/// Runs audit_nodes; throws AuditFailure naming the first bad node.
NodalHypersurface make_nodal_hypersurface(GradedPoly f, PointSet nodes, Field field = {});

/// y^2 = f with f of degree 2d in four variables; nodes are those of V(f).
struct DoubleSolid {
    int d = 0;
    GradedPoly f;
    PointSet nodes;
    std::vector<NodeRecord> audit;
};

DoubleSolid make_double_solid(GradedPoly f, PointSet nodes, Field field = {});

struct TraceStep {
    int degree = 0;
    long floor = 0;
    long actual = 0;
    std::string rule;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct DefectReport {
    long node_count = 0;
    int critical_degree = 0;
    long eval_rank = 0;
    long defect = 0;
    std::string bound_name = "none";
    long bound_value = 0;
    bool certified = false;
    bool bound_met = false;     // node_count >= bound_value
    bool bound_tight = false;   // node_count == bound_value
    std::vector<TraceStep> trace;

    friend bool operator==(const DefectReport&, const DefectReport&) = default;
};

int critical_degree_p4(int d);
int critical_degree_double_solid(int d);
int critical_degree_highdim(int n, int d);

/// m * degree - sum(weights). Untested outside the three cases above; the
/// quasi-smoothness hypothesis is the caller's responsibility.
int critical_degree_weighted(const std::vector<int>& weights, int m, int degree);

/// defect = #nodes - points_hilbert(nodes, critical_degree).
DefectReport defect(const PointSet& nodes, int critical_degree, Field field = {});

/// Floors min(k+1, 2d-3-k) on h_{I_H}(k), k = 0..2d-4; bound (d-1)^2.
/// The rank and defect fields are recovered from h_{I_H} by telescoping.
/// Throws std::domain_error when h_{I_H}(2d-4) = 0.
DefectReport certify_min_nodes_p4(int d, const HilbertProfile& h_ih, long node_count);

/// Floors k+1 (k <= d-1), d (up to 2d-2), 3d-2-k (up to 3d-3); bound d(2d-1).
/// Throws std::domain_error when h_{I_H}(3d-3) = 0.
DefectReport certify_min_nodes_double_solid(int d, const HilbertProfile& h_ih, long node_count);

/// Codimension of the degree-d part of the node ideal.
long tangent_codim(const PointSet& nodes, int d, Field field = {});

} // namespace defectk
