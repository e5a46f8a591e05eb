#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "msd/montecarlo.hpp"
#include "msd/planner.hpp"
#include "msd/types.hpp"

namespace msd {

/// %.{precision}g rendering used by every emitter.
std::string format_real(real value, int precision = 6);

/// Write via a temporary file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// CSV emitters.  Headers are stable; one row per record.
std::string robustness_csv(const std::vector<RobustnessPoint>& points, int precision = 6);
std::string gaussian_csv(const DistributionReport& report, int precision = 6);
std::string experiment_csv(const std::vector<ExperimentRow>& rows, int precision = 6);
std::string plan_csv(const PlanTrace& trace, int precision = 6);

std::string plan_json(const PlanTrace& trace, int precision = 6);
std::string step_json(const StepResult& result, real nu, int precision = 6);

}  // namespace msd
