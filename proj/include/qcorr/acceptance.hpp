#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qcorr/correlations.hpp"

namespace qcorr {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20240611;
    Thresholds thresholds;
    /// Empty means every criterion.
    std::set<int> only;
};

inline constexpr double kSelftestBudgetSeconds = 300.0;

/// Runs the release-gate criteria in order. Criterion 11 also checks that the
/// whole run stayed inside kSelftestBudgetSeconds.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "[PASS] 3 Weyl ... (0.81 s) detail"
std::string format_result(const CriterionResult& result);

}  // namespace qcorr
