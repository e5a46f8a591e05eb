#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "msd/types.hpp"

namespace msd {

/// Outcome of one verification check.  Discrepancy marks a soft miss: the
/// region-statistics fractions depend on an undocumented volume measure, so an
/// out-of-tolerance value there is reported without failing the run.
enum class CheckStatus { Pass, Fail, Discrepancy };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerifyOptions {
  std::filesystem::path cache_dir;  // empty: default_cache_dir()
  int region_resolution = 400;
  int mc_samples = 50;
  int workers = 0;
};

/// The twelve acceptance checks, in order.
std::vector<CheckResult> run_acceptance(const VerifyOptions& options = {});

/// Table-vs-oracle consistency checks (also exposed individually so a stale or
/// tampered cache can be pinpointed).
CheckResult check_table_consistency(const std::string& key, const VerifyOptions& options);

/// Acceptance checks plus the per-table consistency checks.
std::vector<CheckResult> run_all_checks(const VerifyOptions& options = {});

int count_failures(const std::vector<CheckResult>& results);
std::string render_report(const std::vector<CheckResult>& results);

}  // namespace msd
