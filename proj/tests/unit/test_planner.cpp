#include <doctest.h>

#include <cmath>

#include "msd/bloch.hpp"
#include "msd/errors.hpp"
#include "msd/io.hpp"
#include "msd/planner.hpp"

using namespace msd;

TEST_CASE("per-round efficiency") {
  const auto [upper_nu, upper_in] = efficiency(Protocol::H4, h4_fixed_points().second);
  CHECK(std::abs(upper_nu) < 1e-9);  // no gain at a fixed point

  CHECK(efficiency(Protocol::H4, 0.75).nu > efficiency(Protocol::H7, 0.75).nu);
  CHECK(efficiency(Protocol::H4, 0.75).in_range);
  CHECK_FALSE(efficiency(Protocol::T5, 0.6).in_range);
  CHECK(efficiency(Protocol::T5, 0.6).nu < 0.0);
}

TEST_CASE("h4/t5 efficiency crossover") {
  const real cross = h4_t5_crossover();
  CHECK(cross == doctest::Approx(0.870).epsilon(0.006));
  // exactly one sign change across the 4-qubit distillable range
  int changes = 0;
  real prev = efficiency_h4_toward_t(0.7075) - efficiency_t5_at_haxis(0.7075);
  for (int i = 1; i <= 200; ++i) {
    const real p = 0.7075 + (0.9645 - 0.7075) * i / 200.0;
    const real d = efficiency_h4_toward_t(p) - efficiency_t5_at_haxis(p);
    if ((d < 0) != (prev < 0)) ++changes;
    prev = d;
  }
  CHECK(changes == 1);
}

TEST_CASE("whole-procedure efficiency") {
  // single round: V reduces to nu
  const StepResult r = t5_map(0.8);
  PlanTrace single;
  single.steps.push_back({PlanStep::Kind::T5, r.p_in, r.p_out, r.theta, r.n});
  CHECK(whole_efficiency(single) == doctest::Approx(efficiency(Protocol::T5, 0.8).nu).epsilon(1e-12));

  // deterministic rounds: V = sum(dp) / prod(n)
  PlanTrace sure;
  sure.steps.push_back({PlanStep::Kind::H4, 0.8, 0.85, 1.0, 4});
  sure.steps.push_back({PlanStep::Kind::T5, 0.7, 0.8, 1.0, 5});
  CHECK(whole_efficiency(sure) == doctest::Approx((0.05 + 0.1) / 20.0).epsilon(1e-12));

  PlanTrace empty;
  empty.steps.push_back({PlanStep::Kind::TwirlT, 0.8, 0.8, 1.0, 0});
  CHECK_THROWS_AS(whole_efficiency(empty), std::invalid_argument);
}

TEST_CASE("iterations_to_target") {
  CHECK(iterations_to_target(0.78, Protocol::T5, 0.78) == 0);
  CHECK_FALSE(iterations_to_target(0.78, Protocol::H4, 0.999).has_value());  // beyond the upper fixed point
  CHECK(iterations_to_target(0.78, Protocol::H4, 0.9).has_value());

  const auto n7 = iterations_to_target(0.78, Protocol::H7, 0.999);
  REQUIRE(n7.has_value());
  CHECK(*n7 >= 25);
  CHECK(*n7 <= 26);

  CHECK_THROWS_AS(iterations_to_target(0.6, Protocol::H4, 0.9), NotDistillable);
  CHECK_THROWS_AS(iterations_to_target(0.5, Protocol::T5, 0.9), NotDistillable);
  CHECK_THROWS_AS(iterations_to_target(0.9, Protocol::T5, 1.0), std::invalid_argument);
}

TEST_CASE("hybrid plan routing") {
  // high p_T goes straight to the 5-qubit module
  const PlanTrace direct = plan_hybrid(state_on_axis(canonical_t_axis(), 0.9), 0.999);
  CHECK(direct.n4 == 0);
  CHECK(direct.n5 > 0);
  CHECK(direct.steps.front().kind == PlanStep::Kind::TwirlT);
  CHECK(direct.final_polarization >= 0.999);

  // octahedron interior is not distillable
  try {
    plan_hybrid(vec3(0.1, 0.1, 0.1), 0.999);
    FAIL("expected NotDistillable");
  } catch (const NotDistillable& e) {
    CHECK(e.inside_octahedron);
    CHECK(e.p_t < t5_threshold_polarization);
    CHECK(e.p_h < h7_threshold_polarization);
  }

  // H-axis input below the T-direction threshold runs 4-qubit rounds first;
  // with the 0.870 switch the one-round maps give 7 rounds then 5 rounds.
  const PlanTrace hybrid = plan_hybrid(state_on_axis(canonical_h_axis(), 0.78), 0.999);
  CHECK(hybrid.n4 == 7);
  CHECK(hybrid.n5 == 5);
  CHECK(hybrid.final_polarization >= 0.999);
  CHECK(hybrid.steps.front().kind == PlanStep::Kind::TwirlH);

  // the switch event carries the sqrt(2/3) conversion
  bool saw_switch = false;
  for (std::size_t i = 0; i + 1 < hybrid.steps.size(); ++i) {
    if (hybrid.steps[i].kind == PlanStep::Kind::TwirlT) {
      saw_switch = true;
      CHECK(hybrid.steps[i].p_out ==
            doctest::Approx(dt_loss_factor * hybrid.steps[i].p_in).epsilon(1e-12));
      CHECK(hybrid.steps[i].p_in >= hybrid_turning_point);
    }
    CHECK(hybrid.steps[i + 1].p_in == doctest::Approx(hybrid.steps[i].p_out).epsilon(1e-12));
  }
  CHECK(saw_switch);
}

TEST_CASE("qubit cost accounting") {
  const PlanTrace hybrid = plan_hybrid(state_on_axis(canonical_h_axis(), 0.78), 0.999);
  const QubitCost avg = qubit_cost(hybrid, CostMode::Average);
  CHECK_FALSE(avg.infinite);
  CHECK(avg.log10_cost == doctest::Approx(7 * std::log10(4 / 0.244) + 5 * std::log10(5 / 0.124))
                              .epsilon(1e-12));

  const QubitCost per_step = qubit_cost(hybrid, CostMode::PerStep);
  // success probabilities never exceed 1, so the cost is at least prod(n)
  real floor = 0.0;
  for (const PlanStep& s : hybrid.steps)
    if (s.n > 0) floor += std::log10(static_cast<real>(s.n));
  CHECK(per_step.log10_cost >= floor);

  PlanTrace broken = hybrid;
  broken.steps[2].theta = 0.0;
  CHECK(qubit_cost(broken, CostMode::PerStep).infinite);
}

TEST_CASE("optimal turning point") {
  const TurningPointResult r = optimal_turning_point(0.78, 0.999);
  CHECK_FALSE(r.t5_only);
  CHECK(r.p_star > 0.83);
  CHECK(r.p_star < 0.88);
  // never worse than the fixed-switch schedule
  const PlanTrace fixed = plan_hybrid(state_on_axis(canonical_h_axis(), 0.78), 0.999);
  CHECK(r.log10_cost <= qubit_cost(fixed, CostMode::Average).log10_cost + 1e-12);
  // just above threshold at least one 4-qubit round is needed
  CHECK(optimal_turning_point(0.7075, 0.999).n4 > 0);

  CHECK_THROWS_AS(optimal_turning_point(0.60, 0.999), std::invalid_argument);
}

TEST_CASE("plan trace rendering") {
  const PlanTrace trace = plan_hybrid(state_on_axis(canonical_h_axis(), 0.9), 0.999);
  const std::string csv = plan_csv(trace, 6);
  CHECK(csv.find("step,kind,p_in,p_out,theta,n,cum_log10_cost") == 0);
  CHECK(csv.find("twirl_t") != std::string::npos);
  const std::string json = plan_json(trace, 6);
  CHECK(json.find("\"n5\"") != std::string::npos);
}

TEST_CASE("region statistics smoke test") {
  const RegionStats s = region_statistics(60, 2);
  CHECK(s.distillable_cells > 0);
  CHECK(s.five_qubit_less_efficient >= 0.0);
  CHECK(s.five_qubit_less_efficient <= 1.0);
  CHECK(s.seven_qubit_cheaper >= 0.0);
  CHECK(s.seven_qubit_cheaper < 0.5);
  CHECK(s.case4_direct_t5_better > 0.5);
  CHECK_THROWS_AS(region_statistics(10), std::invalid_argument);
}
