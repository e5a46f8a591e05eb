#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "msd/bloch.hpp"
#include "msd/density.hpp"
#include "msd/errors.hpp"
#include "msd/rng.hpp"

using namespace msd;

TEST_CASE("density_from_bloch basics") {
  const cmat up = density_from_bloch(vec3(0, 0, 1));
  CHECK(std::abs(up(0, 0) - complex(1, 0)) < 1e-15);
  CHECK(std::abs(up(1, 1)) < 1e-15);
  CHECK(std::abs(up(0, 1)) < 1e-15);

  const cmat mixed = density_from_bloch(vec3(0, 0, 0));
  CHECK(std::abs(mixed(0, 0) - complex(0.5, 0)) < 1e-15);
  CHECK(std::abs(mixed(1, 0)) < 1e-15);

  CHECK_THROWS_AS(density_from_bloch(vec3(0.8, 0.8, 0.8)), std::invalid_argument);
}

TEST_CASE("magic states are pure") {
  const cmat rho_h = density_from_bloch(vec3(1 / sqrt2, 0, 1 / sqrt2));
  Eigen::SelfAdjointEigenSolver<cmat> es(rho_h);
  CHECK(es.eigenvalues().minCoeff() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bloch_from_density round trip") {
  CHECK(bloch_from_density(density_from_bloch(vec3(0, 0, 0))).norm() < 1e-15);
  CHECK((bloch_from_density(density_from_bloch(vec3(1 / sqrt2, 0, 1 / sqrt2))) -
         vec3(1 / sqrt2, 0, 1 / sqrt2))
            .norm() < 1e-15);
  const CounterRng rng{21, 0};
  std::uint64_t c = 0;
  for (int i = 0; i < 50; ++i) {
    const vec3 s(rng.uniform(c++, -0.57, 0.57), rng.uniform(c++, -0.57, 0.57), rng.uniform(c++, -0.57, 0.57));
    CHECK((bloch_from_density(density_from_bloch(s)) - s).norm() < 1e-12);
  }
  CHECK_THROWS_AS(bloch_from_density(cmat::Identity(4, 4)), std::invalid_argument);
}

TEST_CASE("product_state") {
  const vec3 s = state_on_axis(canonical_h_axis(), 0.826);
  const cmat rho = product_state({s, s, s, s});
  CHECK(rho.rows() == 16);
  CHECK(std::abs(rho.trace() - complex(1, 0)) < 1e-12);
  CHECK(is_hermitian(rho));

  const cmat one = product_state({s});
  CHECK((one - density_from_bloch(s)).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(product_state(std::vector<vec3>(9, s)), std::invalid_argument);
  CHECK_THROWS_AS(product_state({}), std::invalid_argument);
}

TEST_CASE("reduce_to_qubit recovers the factors") {
  const vec3 a(0.2, -0.1, 0.4), b(-0.3, 0.2, 0.1), c(0.0, 0.5, -0.2);
  const cmat rho = product_state({a, b, c});
  CHECK((bloch_from_density(reduce_to_qubit(rho, 0)) - a).norm() < 1e-12);
  CHECK((bloch_from_density(reduce_to_qubit(rho, 1)) - b).norm() < 1e-12);
  CHECK((bloch_from_density(reduce_to_qubit(rho, 2)) - c).norm() < 1e-12);
}

TEST_CASE("projective measurement") {
  const cmat up = density_from_bloch(vec3(0, 0, 1));
  const auto [post, prob] = measure_projective(up, pauli("Z"), +1);
  CHECK(prob == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((post - up).cwiseAbs().maxCoeff() < 1e-12);

  const auto [plus, half] = measure_projective(density_from_bloch(vec3(0, 0, 0)), pauli("X"), +1);
  CHECK(half == doctest::Approx(0.5).epsilon(1e-12));
  CHECK((bloch_from_density(plus) - vec3(1, 0, 0)).norm() < 1e-12);

  CHECK_THROWS_AS(measure_projective(up, pauli("Z"), -1), ImpossibleOutcome);
}

TEST_CASE("measurement preserves trace, Hermiticity and positivity") {
  const CounterRng rng{22, 0};
  std::uint64_t c = 0;
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int i = 0; i < 30; ++i) {
    std::vector<vec3> states;
    for (int q = 0; q < 3; ++q)
      states.emplace_back(rng.uniform(c++, -0.5, 0.5), rng.uniform(c++, -0.5, 0.5),
                          rng.uniform(c++, -0.5, 0.5));
    const cmat rho = product_state(states);
    PauliString obs;
    obs.letters = {letters[rng.bits(c++) % 4], letters[rng.bits(c++) % 4], letters[rng.bits(c++) % 4]};
    if (obs.weight() == 0) obs.letters[2] = 'X';
    const auto [post, prob] = measure_projective(rho, obs, rng.bits(c++) % 2 ? 1 : -1);
    CHECK(prob >= 0.0);
    CHECK(prob <= 1.0 + 1e-12);
    CHECK(is_hermitian(post));
    CHECK(has_unit_trace(post));
    CHECK(is_positive_semidefinite(post));
  }
}
