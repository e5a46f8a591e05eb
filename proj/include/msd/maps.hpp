#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include "msd/map_table.hpp"
#include "msd/types.hpp"

namespace msd {

enum class Protocol { H4, T5, H7 };

const char* protocol_name(Protocol p);
int protocol_copies(Protocol p);
Protocol protocol_from_name(const std::string& name);

/// One distillation round: input and output polarization along the protocol's
/// axis, success probability, and copies consumed.
struct StepResult {
  Protocol protocol;
  real p_in;
  real p_out;
  real theta;
  int n;
};

/// Closed-form 4-qubit round: p_out = (6p^2 + p^4) / (sqrt2 (2 + 2p^2 + p^4)),
/// theta = (2 + 2p^2 + p^4)/16.
StepResult h4_map(real p0);

/// Same round in error-probability form, eps = (1 - p_H)/2.
real h4_error_map(real eps);

/// Roots of p_out(p) = p in (0, 1): the distillation threshold and the
/// ultimate reachable polarization (bisection to 1e-10).
std::pair<real, real> h4_fixed_points();

/// Simulator-derived rounds (table-backed, with odd extension to p < 0).
StepResult t5_map(real p);
StepResult h7_map(real p);
StepResult protocol_map(Protocol proto, real p);

/// Direct density-matrix evaluation, bypassing the table: (p_out, theta).
std::pair<real, real> t5_exact(real p);
std::pair<real, real> h7_exact(real p);

/// Unstable fixed points of the simulator-derived maps (bisection on exact evaluations).
real t5_threshold();
real h7_threshold();

/// Process-wide tables (1001 nodes, cached under default_cache_dir()).
const MapTable& t5_table();
const MapTable& h7_table();
constexpr int default_map_grid = 1001;

/// Local behaviour near the attracting fixed point, from a log-log fit of
/// eps_out vs eps on a decade of offsets: eps_out ~ factor * eps^order.
struct ConvergenceEstimate {
  real order;
  real factor;
};
ConvergenceEstimate convergence_order(Protocol proto);

}  // namespace msd
