#pragma once

// Named verification suites behind `defectk verify`.

#include <string>
#include <vector>

#include "defectk/analysis.hpp"

namespace defectk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    Json instance;   // replayable scenario of a failing case; null on pass
    double seconds = 0;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const;
};

/// macaulay, gotzmann, thmHS, thmDC, highdim, c0
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const AnalysisOptions& opts = {});

/// Every c in [0, max_c] appears exactly once among weakly decreasing eps lists
/// of length d, and expand() returns that list.
bool brute_force_expansions_agree(long max_c, int d, std::string* failure = nullptr);

/// Base locus probes on the three reference pieces: (x0,x1) in degree 1 of 5
/// variables, all of S_2 in 4 variables, two quadrics in 4 variables.
std::vector<std::pair<std::string, BaseLocus>> reference_base_loci(std::optional<int> degree_cap = std::nullopt);

/// Degree t pieces, t = 0..top, of the monomial complete intersection (x_i^{deg_i}).
std::vector<IdealPiece> monomial_ci_pieces(const std::vector<int>& degrees, int top);

Json to_json(const CheckResult& c);
Json to_json(const SuiteResult& s);

} // namespace defectk
