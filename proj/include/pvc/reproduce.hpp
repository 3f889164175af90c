#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pvc {

struct ReproduceOptions {
    /// Smaller sweeps for a fast smoke run; the full run uses the sizes of the acceptance criteria.
    bool quick = false;
    std::uint64_t seed = 0;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string summary;
    nlohmann::json details;
    double seconds = 0.0;
};

constexpr int kCriterionCount = 10;

/// Runs acceptance criterion `id` (1..10). Throws InvalidParameter for other ids.
CriterionResult run_criterion(int id, const ReproduceOptions& options = {});
std::vector<CriterionResult> run_all_criteria(const ReproduceOptions& options = {});

std::string report_markdown(const std::vector<CriterionResult>& results);
/// Timings live under "timing" so the rest of the document is deterministic.
nlohmann::json report_json(const std::vector<CriterionResult>& results);

}  // namespace pvc
