#pragma once

#include <optional>
#include <vector>

#include "msd/maps.hpp"
#include "msd/types.hpp"

namespace msd {

/// Switching polarization of the hybrid protocol: once the 4-qubit module has
/// pushed p_H this far, the state is T-projected and handed to the 5-qubit module.
inline constexpr real hybrid_turning_point = 0.870;

/// Average per-round success probabilities used by the average cost mode.
inline constexpr real avg_theta_h4 = 0.244;
inline constexpr real avg_theta_t5 = 0.124;
inline constexpr real avg_theta_h7 = 0.046;

/// One entry of a plan: either a distillation round or a twirl event.
/// Twirl events consume no qubits and succeed deterministically; the D_T entry
/// converts H-polarization to T-polarization (factor sqrt(2/3)).
struct PlanStep {
  enum class Kind { H4, T5, H7, TwirlH, TwirlT };
  Kind kind;
  real p_in;
  real p_out;
  real theta;  // 1 for twirl events
  int n;       // copies consumed, 0 for twirl events
};

struct PlanTrace {
  vec3 input;
  real target;
  std::vector<PlanStep> steps;
  int n4 = 0;
  int n5 = 0;
  int n7 = 0;
  real final_polarization = 0.0;
};

const char* step_kind_name(PlanStep::Kind k);

struct Efficiency {
  real nu;
  bool in_range;
};

/// nu = (p_out - p) * theta / n for one round of the protocol, in the
/// protocol's own target direction.
Efficiency efficiency(Protocol proto, real p);

/// H-axis-state efficiencies in the T direction, as used when comparing the
/// 4-qubit module against the 5-qubit one: the 4-qubit value carries the
/// sqrt(2/3) projection loss, the 5-qubit one is evaluated at the state's p_T.
real efficiency_h4_toward_t(real p_h);
real efficiency_t5_at_haxis(real p_h);

/// The polarization where the two curves above cross (unique in the 4-qubit
/// distillable range).
real h4_t5_crossover();

/// Whole-procedure efficiency V = sum(dp) / (prod n / prod theta) over the
/// distillation rounds of the trace.
real whole_efficiency(const PlanTrace& trace);

/// Smallest k with map^k(p0) >= target.  Returns nullopt when the target is
/// beyond the protocol's reach (4-qubit map above its upper fixed point);
/// throws NotDistillable when p0 is below the protocol's threshold.
std::optional<int> iterations_to_target(real p0, Protocol proto, real target);

/// The hybrid protocol: route per the flowchart (direct 5-qubit when
/// p_T > sqrt(3/7); otherwise 4-qubit rounds to the turning point, D_T, then
/// 5-qubit rounds to the target).  Throws NotDistillable otherwise.
PlanTrace plan_hybrid(const vec3& input, real target_pt);
PlanTrace plan_hybrid_with_turning(const vec3& input, real target_pt, real turning_ph);

/// Plain 7-qubit schedule in the H direction, for cost comparisons.
PlanTrace plan_seven_qubit(const vec3& input, real target_ph);

enum class CostMode { PerStep, Average };

struct QubitCost {
  real log10_cost;
  bool infinite;
};

/// log10 of prod(n_i / theta_i) over distillation rounds; average mode
/// substitutes the per-protocol average success probabilities.
QubitCost qubit_cost(const PlanTrace& trace, CostMode mode);

struct TurningPointResult {
  real p_star;      // switch polarization actually used (p0 itself for a direct plan)
  int n4;
  int n5;
  real log10_cost;  // average mode
  bool t5_only;
};

/// Scan candidate turning points reachable from p0 and keep the cheapest
/// average-mode schedule to the target.
TurningPointResult optimal_turning_point(real p0, real target_pt);

struct RegionStats {
  int resolution = 0;
  long long distillable_cells = 0;
  // Fraction of A_T intersect A_H where the direct five-qubit schedule costs
  // more than detouring through the four-qubit module (average cost mode).
  real five_qubit_less_efficient = 0.0;
  // Fraction of the distillable region where the 7-qubit schedule is cheaper
  // than the hybrid one (7-qubit target p_H >= 0.99, hybrid target p_T >= 0.999,
  // average cost mode).
  real seven_qubit_cheaper = 0.0;
  // Fraction of the band sqrt(3/7) < p_T < 0.71, 1/sqrt2 < p_H < 0.87 where the
  // direct 5-qubit schedule is at most as expensive as 4-qubit-first.
  real case4_direct_t5_better = 0.0;
};

/// Uniform-volume statistics over the positive octant of the Bloch ball
/// (cell centers at resolution^3; a cell counts when its center is inside the
/// unit sphere).  Deterministic for any worker count.
RegionStats region_statistics(int resolution, int workers = 0, real seven_qubit_target = 0.99,
                              real hybrid_target = 0.999);

}  // namespace msd
