#include "msd/planner.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "msd/bloch.hpp"
#include "msd/errors.hpp"
#include "msd/parallel.hpp"

namespace msd {

namespace {

constexpr int max_rounds = 100000;

real protocol_threshold(Protocol proto) {
  switch (proto) {
    case Protocol::H4: return h4_fixed_points().first;
    case Protocol::T5: return t5_threshold();
    case Protocol::H7: return h7_threshold();
  }
  throw std::logic_error("unknown protocol");
}

PlanStep distill_step(Protocol proto, real p) {
  const StepResult r = protocol_map(proto, p);
  PlanStep s;
  s.kind = proto == Protocol::H4   ? PlanStep::Kind::H4
           : proto == Protocol::T5 ? PlanStep::Kind::T5
                                   : PlanStep::Kind::H7;
  s.p_in = r.p_in;
  s.p_out = r.p_out;
  s.theta = r.theta;
  s.n = r.n;
  return s;
}

PlanStep twirl_step(PlanStep::Kind kind, real p_in, real p_out) {
  return PlanStep{kind, p_in, p_out, 1.0, 0};
}

void require_target(real target) {
  if (!(target > 0.0) || !(target < 1.0))
    throw std::invalid_argument("target polarization must lie in (0, 1)");
}

int count_rounds_to(Protocol proto, real& p, real target, std::vector<PlanStep>* steps) {
  int rounds = 0;
  while (p < target) {
    if (++rounds > max_rounds) throw std::logic_error("iteration failed to reach target");
    PlanStep s = distill_step(proto, p);
    if (s.p_out <= p + 1e-15)
      throw UnreachableTarget(std::string(protocol_name(proto)) + ": map stalled at p = " +
                              std::to_string(p) + " before reaching " + std::to_string(target));
    if (steps) steps->push_back(s);
    p = s.p_out;
  }
  return rounds;
}

// Descending ladder of round boundaries: ladder[k] is the smallest input that
// reaches `target` within k rounds.  Preimages stop once they sit on top of
// the threshold; inputs below the last rung are assigned ladder.size() rounds.
std::vector<real> round_ladder(Protocol proto, real target, real threshold) {
  std::vector<real> ladder{target};
  while (static_cast<int>(ladder.size()) < 400) {
    real lo = threshold + 1e-13, hi = ladder.back();
    const real want = ladder.back();
    if (protocol_map(proto, lo).p_out >= want) break;  // one more round from anywhere above threshold
    for (int it = 0; it < 80; ++it) {
      const real mid = 0.5 * (lo + hi);
      if (protocol_map(proto, mid).p_out < want)
        lo = mid;
      else
        hi = mid;
    }
    const real pre = 0.5 * (lo + hi);
    if (pre - threshold < 1e-12) break;
    ladder.push_back(pre);
  }
  return ladder;
}

int ladder_rounds(const std::vector<real>& ladder, real p) {
  for (std::size_t k = 0; k < ladder.size(); ++k)
    if (p >= ladder[k]) return static_cast<int>(k);
  return static_cast<int>(ladder.size());
}

}  // namespace

const char* step_kind_name(PlanStep::Kind k) {
  switch (k) {
    case PlanStep::Kind::H4: return "h4";
    case PlanStep::Kind::T5: return "t5";
    case PlanStep::Kind::H7: return "h7";
    case PlanStep::Kind::TwirlH: return "twirl_h";
    case PlanStep::Kind::TwirlT: return "twirl_t";
  }
  throw std::logic_error("unknown step kind");
}

Efficiency efficiency(Protocol proto, real p) {
  const StepResult r = protocol_map(proto, p);
  const real nu = (r.p_out - p) * r.theta / r.n;
  const real lo = protocol_threshold(proto);
  const real hi = proto == Protocol::H4 ? h4_fixed_points().second : 1.0;
  return {nu, p > lo && p < hi};
}

real efficiency_h4_toward_t(real p_h) { return dt_loss_factor * efficiency(Protocol::H4, p_h).nu; }

real efficiency_t5_at_haxis(real p_h) { return efficiency(Protocol::T5, dt_loss_factor * p_h).nu; }

real h4_t5_crossover() {
  real lo = 0.75, hi = 0.93;
  auto diff = [](real p) { return efficiency_h4_toward_t(p) - efficiency_t5_at_haxis(p); };
  real dlo = diff(lo);
  if (!(dlo > 0.0) || !(diff(hi) < 0.0)) throw std::logic_error("crossover: bracket failed");
  for (int it = 0; it < 60; ++it) {
    const real mid = 0.5 * (lo + hi);
    if (diff(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

real whole_efficiency(const PlanTrace& trace) {
  real dp_sum = 0.0;
  real log_consumption = 0.0;
  int rounds = 0;
  for (const PlanStep& s : trace.steps) {
    if (s.n == 0) continue;
    dp_sum += s.p_out - s.p_in;
    log_consumption += std::log(static_cast<real>(s.n) / s.theta);
    ++rounds;
  }
  if (rounds == 0) throw std::invalid_argument("whole_efficiency: trace has no distillation rounds");
  return dp_sum / std::exp(log_consumption);
}

std::optional<int> iterations_to_target(real p0, Protocol proto, real target) {
  require_target(target);
  if (std::abs(p0) > 1.0) throw std::invalid_argument("iterations_to_target: |p0| > 1");
  if (p0 >= target) return 0;
  const real threshold = protocol_threshold(proto);
  if (p0 <= threshold)
    throw NotDistillable(std::string(protocol_name(proto)) + ": input polarization " + std::to_string(p0) +
                             " is at or below the distillation threshold " + std::to_string(threshold),
                         p0, p0, false);
  real p = p0;
  for (int k = 1; k <= max_rounds; ++k) {
    const real next = protocol_map(proto, p).p_out;
    if (next >= target) return k;
    if (next <= p + 1e-15) return std::nullopt;  // stalled at a fixed point below target
    p = next;
  }
  return std::nullopt;
}

PlanTrace plan_hybrid_with_turning(const vec3& input, real target_pt, real turning_ph) {
  require_target(target_pt);
  const real pt_in = polarization_t(input);
  const real ph_in = polarization_h(input);
  PlanTrace trace;
  trace.input = input;
  trace.target = target_pt;

  // Boundary cases route as if strictly above the predicate.
  if (pt_in >= t5_threshold_polarization) {
    trace.steps.push_back(twirl_step(PlanStep::Kind::TwirlT, pt_in, pt_in));
    real p = pt_in;
    trace.n5 = count_rounds_to(Protocol::T5, p, target_pt, &trace.steps);
    trace.final_polarization = p;
    return trace;
  }
  if (ph_in >= h7_threshold_polarization) {
    trace.steps.push_back(twirl_step(PlanStep::Kind::TwirlH, ph_in, ph_in));
    real p = ph_in;
    trace.n4 = count_rounds_to(Protocol::H4, p, turning_ph, &trace.steps);
    trace.steps.push_back(twirl_step(PlanStep::Kind::TwirlT, p, dt_loss_factor * p));
    p *= dt_loss_factor;
    trace.n5 = count_rounds_to(Protocol::T5, p, target_pt, &trace.steps);
    trace.final_polarization = p;
    return trace;
  }
  throw NotDistillable("input fails both routing predicates: p_T = " + std::to_string(pt_in) +
                           " <= " + std::to_string(t5_threshold_polarization) +
                           " and p_H = " + std::to_string(ph_in) +
                           " <= " + std::to_string(h7_threshold_polarization) +
                           (in_stabilizer_octahedron(input) ? " (inside the stabilizer octahedron)" : ""),
                       ph_in, pt_in, in_stabilizer_octahedron(input));
}

PlanTrace plan_hybrid(const vec3& input, real target_pt) {
  return plan_hybrid_with_turning(input, target_pt, hybrid_turning_point);
}

PlanTrace plan_seven_qubit(const vec3& input, real target_ph) {
  require_target(target_ph);
  const real ph_in = polarization_h(input);
  PlanTrace trace;
  trace.input = input;
  trace.target = target_ph;
  if (ph_in <= h7_threshold_polarization)
    throw NotDistillable("seven-qubit: p_H = " + std::to_string(ph_in) + " is below threshold", ph_in,
                         polarization_t(input), in_stabilizer_octahedron(input));
  trace.steps.push_back(twirl_step(PlanStep::Kind::TwirlH, ph_in, ph_in));
  real p = ph_in;
  trace.n7 = count_rounds_to(Protocol::H7, p, target_ph, &trace.steps);
  trace.final_polarization = p;
  return trace;
}

QubitCost qubit_cost(const PlanTrace& trace, CostMode mode) {
  if (mode == CostMode::Average) {
    const real cost = trace.n4 * std::log10(4.0 / avg_theta_h4) + trace.n5 * std::log10(5.0 / avg_theta_t5) +
                      trace.n7 * std::log10(7.0 / avg_theta_h7);
    return {cost, false};
  }
  real cost = 0.0;
  for (const PlanStep& s : trace.steps) {
    if (s.n == 0) continue;
    if (s.theta <= 0.0) return {std::numeric_limits<real>::infinity(), true};
    cost += std::log10(static_cast<real>(s.n) / s.theta);
  }
  return {cost, false};
}

TurningPointResult optimal_turning_point(real p0, real target_pt) {
  require_target(target_pt);
  if (p0 <= h7_threshold_polarization || p0 >= 1.0)
    throw std::invalid_argument("optimal_turning_point: p0 must lie in the 4-qubit distillable range");
  const real c4 = std::log10(4.0 / avg_theta_h4);
  const real c5 = std::log10(5.0 / avg_theta_t5);

  TurningPointResult best{};
  bool have = false;
  real p = p0;
  for (int k = 0; k <= 400; ++k) {
    const real pt = dt_loss_factor * p;
    if (pt > t5_threshold_polarization) {
      real q = pt;
      const int n5 = count_rounds_to(Protocol::T5, q, target_pt, nullptr);
      const real cost = k * c4 + n5 * c5;
      if (!have || cost < best.log10_cost) {
        best = {p, k, n5, cost, k == 0};
        have = true;
      }
    }
    const real next = h4_map(p).p_out;
    if (next <= p + 1e-15) break;
    p = next;
  }
  if (!have) throw NotDistillable("optimal_turning_point: no reachable switch point", p0,
                                  dt_loss_factor * p0, false);
  return best;
}

RegionStats region_statistics(int resolution, int workers, real seven_qubit_target, real hybrid_target) {
  if (resolution < 50) throw std::invalid_argument("region_statistics: resolution must be >= 50");
  require_target(seven_qubit_target);
  require_target(hybrid_target);

  const real t5_thresh = t5_threshold();
  const real h7_thresh = h7_threshold();
  const real c4 = std::log10(4.0 / avg_theta_h4);
  const real c5 = std::log10(5.0 / avg_theta_t5);
  const real c7 = std::log10(7.0 / avg_theta_h7);

  const std::vector<real> t5_ladder = round_ladder(Protocol::T5, hybrid_target, t5_thresh);
  const std::vector<real> h7_ladder = round_ladder(Protocol::H7, seven_qubit_target, h7_thresh);
  const std::vector<real> h4_ladder = round_ladder(Protocol::H4, hybrid_turning_point,
                                                   h4_fixed_points().first);

  // Hybrid average-mode cost for a state with the given polarizations;
  // follows the flowchart routing.
  auto hybrid_cost = [&](real ph, real pt) {
    if (pt > t5_thresh) return ladder_rounds(t5_ladder, pt) * c5;
    real p = ph;
    int n4 = ladder_rounds(h4_ladder, ph);
    for (int k = 0; k < n4; ++k) p = h4_map(p).p_out;
    return n4 * c4 + ladder_rounds(t5_ladder, dt_loss_factor * p) * c5;
  };

  struct SliceCounts {
    long long at_ah = 0, five_less = 0;
    long long distillable = 0, seven_cheaper = 0;
    long long case4 = 0, case4_direct = 0;
  };
  std::vector<SliceCounts> slices(resolution);

  parallel_for(resolution, workers, [&](long long ix) {
    SliceCounts& c = slices[ix];
    const real x = (static_cast<real>(ix) + 0.5) / resolution;
    for (int iy = 0; iy < resolution; ++iy) {
      const real y = (iy + 0.5) / static_cast<real>(resolution);
      if (x * x + y * y > 1.0) break;
      for (int iz = 0; iz < resolution; ++iz) {
        const real z = (iz + 0.5) / static_cast<real>(resolution);
        if (x * x + y * y + z * z > 1.0) break;
        const real ph = (x + z) / sqrt2;
        const real pt = (x + y + z) / sqrt3;
        const bool in_at = pt > t5_thresh;
        const bool in_ah = ph > h7_thresh;
        if (!in_at && !in_ah) continue;

        c.distillable += 1;
        if (in_at && in_ah) {
          c.at_ah += 1;
          // Routing comparison behind the flowchart's first predicate: is the
          // direct five-qubit schedule more expensive than detouring through
          // the four-qubit module?
          const real direct = ladder_rounds(t5_ladder, pt) * c5;
          real p = ph;
          const int n4 = ladder_rounds(h4_ladder, ph);
          for (int k = 0; k < n4; ++k) p = h4_map(p).p_out;
          const real via_h4 = n4 * c4 + ladder_rounds(t5_ladder, dt_loss_factor * p) * c5;
          if (direct > via_h4) c.five_less += 1;
        }
        const real cost_h = hybrid_cost(ph, pt);
        if (in_ah && ladder_rounds(h7_ladder, ph) * c7 < cost_h) c.seven_cheaper += 1;
        if (in_at && pt < 0.71 && in_ah && ph < hybrid_turning_point) {
          c.case4 += 1;
          const real direct = ladder_rounds(t5_ladder, pt) * c5;
          real p = ph;
          const int n4 = ladder_rounds(h4_ladder, ph);
          for (int k = 0; k < n4; ++k) p = h4_map(p).p_out;
          const real via = n4 * c4 + ladder_rounds(t5_ladder, dt_loss_factor * p) * c5;
          if (direct <= via) c.case4_direct += 1;
        }
      }
    }
  });

  SliceCounts total;
  for (const SliceCounts& c : slices) {
    total.at_ah += c.at_ah;
    total.five_less += c.five_less;
    total.distillable += c.distillable;
    total.seven_cheaper += c.seven_cheaper;
    total.case4 += c.case4;
    total.case4_direct += c.case4_direct;
  }

  RegionStats stats;
  stats.resolution = resolution;
  stats.distillable_cells = total.distillable;
  stats.five_qubit_less_efficient = total.at_ah ? static_cast<real>(total.five_less) / total.at_ah : 0.0;
  stats.seven_qubit_cheaper =
      total.distillable ? static_cast<real>(total.seven_cheaper) / total.distillable : 0.0;
  stats.case4_direct_t5_better = total.case4 ? static_cast<real>(total.case4_direct) / total.case4 : 0.0;
  return stats;
}

}  // namespace msd
