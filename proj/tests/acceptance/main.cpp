// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one line per check.  Exits nonzero if any hard check fails.

#include <cstdio>
#include <iostream>

#include "msd/verify.hpp"

int main() {
  msd::VerifyOptions options;
  options.region_resolution = 400;
  const auto results = msd::run_all_checks(options);
  std::cout << msd::render_report(results);
  return msd::count_failures(results);
}
