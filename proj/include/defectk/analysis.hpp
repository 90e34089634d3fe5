#pragma once

// End-to-end runs on the constructed families: node audit, Hilbert profiles,
// defect, certification, Gorenstein ancestor audit and growth audits.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defectk/json_io.hpp"

namespace defectk {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct AnalysisOptions {
    Field field;
    std::uint64_t seed = kDefaultSeed;
    bool gorenstein = true;
    bool probe = false;
    std::uint32_t probe_prime = 11;
    std::optional<int> degree_cap;
};

struct GorensteinAudit {
    int socle_degree = 0;
    HilbertProfile profile;
    bool symmetric = false;
    bool restriction_matches = false;      // codim (I_H)_e equals the difference profile
    std::vector<int> containment_failures; // degrees e with (I_H)_e not inside I'_e
    int strict_from = 0;
    int bpf_degree = 0;
    BaseLocus bpf;
    bool corgreen = false;

    bool contains_ih() const { return containment_failures.empty(); }
};

/// Ancestor ideal of the first functional vanishing on (I_H)_N.
GorensteinAudit gorenstein_audit(const PointSet& nodes, const GradedPoly& ell, const HilbertProfile& h_ih, int n_degree,
                                 int strict_from, int bpf_degree, Field field = {},
                                 std::optional<int> degree_cap = std::nullopt);

struct FamilyAnalysis {
    std::string family;
    int d = 0;
    int n = 1;
    Json params;
    std::uint64_t seed = kDefaultSeed;
    std::string field;

    GradedPoly f{1, 0};
    PointSet nodes;
    long verified_nodes = 0;
    HilbertProfile h_points;
    GradedPoly ell{1, 1};
    HilbertProfile h_ih;
    DefectReport report;
    long tangent_codim = 0;
    std::optional<Integer> expected_tangent_codim;
    std::optional<GorensteinAudit> gorenstein;
    std::vector<std::pair<std::string, std::vector<GrowthViolation>>> growth;
    std::optional<SingularProbe> probe;

    std::size_t growth_violations() const;
    /// {family, d, n, params, seed}
    Json manifest() const;
};

FamilyAnalysis analyze_plane(const GridParams& params, const AnalysisOptions& opts = {});
FamilyAnalysis analyze_double_solid(const GridParams& params, const AnalysisOptions& opts = {});
FamilyAnalysis analyze_highdim(const HighdimParams& params, const AnalysisOptions& opts = {});

/// name in {plane, double-solid, highdim}, default grid parameters.
FamilyAnalysis analyze_family(const std::string& name, int d, int n, const AnalysisOptions& opts = {});

Json to_json(const GorensteinAudit& g);
Json to_json(const FamilyAnalysis& a);

} // namespace defectk
