#include <doctest.h>

#include <array>
#include <cmath>

#include "msd/bloch.hpp"
#include "msd/circuit4.hpp"
#include "msd/maps.hpp"
#include "msd/rng.hpp"
#include "oracles.hpp"

using namespace msd;

namespace {
std::array<vec3, 4> equal_inputs(real p) {
  const vec3 s = state_on_axis(canonical_h_axis(), p);
  return {s, s, s, s};
}
std::array<vec3, 4> h_inputs(const std::array<real, 4>& p) {
  const MagicAxis h = canonical_h_axis();
  return {state_on_axis(h, p[0]), state_on_axis(h, p[1]), state_on_axis(h, p[2]), state_on_axis(h, p[3])};
}
}  // namespace

TEST_CASE("calibrated layout consumes wires 1..3") {
  const ParityLayout& layout = calibrated_h4_layout();
  bool seen[4] = {false, false, false, false};
  for (const ParityCheck& c : layout.checks) seen[c.recorder] = true;
  CHECK_FALSE(seen[0]);
  CHECK(seen[1]);
  CHECK(seen[2]);
  CHECK(seen[3]);
}

TEST_CASE("equal-input circuit reproduces the closed-form round") {
  for (int i = 0; i <= 100; ++i) {
    const real p = i / 100.0;
    const OutcomeTable t = h4_circuit(equal_inputs(p));
    const StepResult want = h4_map(p);
    CHECK(std::abs(t.theta[0] - want.theta) < 1e-10);
    CHECK(std::abs(t.success_polarization() - want.p_out) < 1e-10);
  }
}

TEST_CASE("named operating points") {
  const OutcomeTable t826 = h4_circuit(equal_inputs(0.826));
  CHECK(t826.theta[0] == doctest::Approx(0.23937828).epsilon(1e-7));
  CHECK(t826.success_polarization() == doctest::Approx(0.8417144).epsilon(1e-6));

  const OutcomeTable pure = h4_circuit(equal_inputs(1.0));
  CHECK(pure.theta[0] == doctest::Approx(5.0 / 16).epsilon(1e-12));
  CHECK(pure.success_polarization() == doctest::Approx(7.0 / (5.0 * sqrt2)).epsilon(1e-12));

  const OutcomeTable mixed = h4_circuit(equal_inputs(0.0));
  CHECK(mixed.theta[0] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(mixed.success_polarization() == doctest::Approx(0.0));
  for (int b = 0; b < 8; ++b) CHECK(mixed.theta[b] == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("outcome table is a distribution with on-axis branches") {
  const CounterRng rng{31, 0};
  std::uint64_t c = 0;
  for (int i = 0; i < 20; ++i) {
    std::array<real, 4> p;
    for (auto& v : p) v = rng.uniform(c++, 0.0, 1.0);
    const OutcomeTable t = h4_circuit(h_inputs(p));
    real sum = 0.0;
    for (int b = 0; b < 8; ++b) {
      CHECK(t.theta[b] >= 0.0);
      CHECK(t.theta[b] <= 1.0 + 1e-12);
      sum += t.theta[b];
      if (t.defined[b]) {
        CHECK(t.x[b] == doctest::Approx(t.z[b]).epsilon(1e-12));  // H projection leaves x = z, y = 0
        CHECK(t.x[b] * t.x[b] + t.z[b] * t.z[b] <= 1.0 + 1e-9);
      }
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("pure inputs make one parity pattern impossible") {
  const OutcomeTable t = h4_circuit(equal_inputs(1.0));
  int undefined = 0;
  for (int b = 0; b < 8; ++b)
    if (!t.defined[b]) {
      ++undefined;
      CHECK(t.theta[b] < 1e-14);
      CHECK(std::isnan(t.x[b]));
    }
  CHECK(undefined == 1);
}

TEST_CASE("unequal inputs match the Pauli-basis branch-0 forms") {
  // Branch-0 statistics of the frozen layout pair wires (0,1) and (2,3).
  const CounterRng rng{32, 0};
  std::uint64_t c = 0;
  for (int i = 0; i < 30; ++i) {
    std::array<real, 4> p;
    for (auto& v : p) v = rng.uniform(c++, 0.0, 1.0);
    const OutcomeTable t = h4_circuit(h_inputs(p));
    const oracles::H4Branch0 want = oracles::h4_branch0(p);
    CHECK(t.theta[0] == doctest::Approx(want.theta).epsilon(1e-11));
    CHECK(t.success_polarization() == doctest::Approx(want.p_h).epsilon(1e-10));
  }
}

TEST_CASE("branch 0 is symmetric within and across the check pairs") {
  const std::array<real, 4> p = {0.91, 0.62, 0.78, 0.55};
  const OutcomeTable base = h4_circuit(h_inputs(p));
  const OutcomeTable swap_first = h4_circuit(h_inputs({p[1], p[0], p[2], p[3]}));
  const OutcomeTable swap_second = h4_circuit(h_inputs({p[0], p[1], p[3], p[2]}));
  const OutcomeTable swap_pairs = h4_circuit(h_inputs({p[2], p[3], p[0], p[1]}));
  for (const OutcomeTable* t : {&swap_first, &swap_second, &swap_pairs}) {
    CHECK(t->theta[0] == doctest::Approx(base.theta[0]).epsilon(1e-12));
    CHECK(t->success_polarization() == doctest::Approx(base.success_polarization()).epsilon(1e-12));
  }
}

TEST_CASE("equal-input map does not depend on the wire pairing") {
  // An alternative layout pairing (0,2) and (1,3) instead of (0,1) and (2,3):
  // same map for equal inputs, permuted pairing for unequal ones.
  using Basis = ParityCheck::Basis;
  const ParityLayout alt{{ParityCheck{Basis::ZZ, 0, 2}, ParityCheck{Basis::ZZ, 1, 3},
                          ParityCheck{Basis::XX, 0, 1}}};
  for (real p : {0.0, 0.3, 0.82, 1.0}) {
    const OutcomeTable want = h4_circuit(equal_inputs(p));
    const OutcomeTable got = h4_circuit_with_layout(alt, equal_inputs(p));
    CHECK(got.theta[0] == doctest::Approx(want.theta[0]).epsilon(1e-12));
    if (p > 0.0)
      CHECK(got.success_polarization() == doctest::Approx(want.success_polarization()).epsilon(1e-12));
  }
  const std::array<real, 4> p = {0.91, 0.62, 0.78, 0.55};
  const OutcomeTable got = h4_circuit_with_layout(alt, h_inputs(p));
  const oracles::H4Branch0 want = oracles::h4_branch0({p[0], p[2], p[1], p[3]});
  CHECK(got.theta[0] == doctest::Approx(want.theta).epsilon(1e-11));
  CHECK(got.success_polarization() == doctest::Approx(want.p_h).epsilon(1e-10));
}

TEST_CASE("unphysical inputs rejected") {
  std::array<vec3, 4> inputs = equal_inputs(0.5);
  inputs[2] = vec3(0.9, 0.9, 0.9);
  CHECK_THROWS_AS(h4_circuit(inputs), std::invalid_argument);
}
