#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "msd/bloch.hpp"
#include "msd/rng.hpp"

using namespace msd;

TEST_CASE("polarization along canonical axes") {
  CHECK(polarization(vec3(1 / sqrt2, 0, 1 / sqrt2), canonical_h_axis()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(polarization(vec3(1 / sqrt3, 1 / sqrt3, 1 / sqrt3), canonical_t_axis()) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(polarization(vec3(1, 0, 0), canonical_h_axis()) == doctest::Approx(1 / sqrt2).epsilon(1e-12));
  CHECK(polarization_t(vec3(1, 0, 0)) == doctest::Approx(1 / sqrt3).epsilon(1e-12));
}

TEST_CASE("magic_axis rejects non-unit directions") {
  CHECK_THROWS_AS(magic_axis(vec3(1, 1, 0), MagicFamily::H), std::invalid_argument);
  CHECK_NOTHROW(magic_axis(vec3(0, 1 / sqrt2, -1 / sqrt2), MagicFamily::H));
}

TEST_CASE("stabilizer octahedron membership") {
  CHECK(in_stabilizer_octahedron(vec3(0, 0, 1)));
  CHECK(in_stabilizer_octahedron(vec3(1.0 / 3, 1.0 / 3, 1.0 / 3)));
  CHECK_FALSE(in_stabilizer_octahedron(vec3(1 / sqrt2, 0, 1 / sqrt2)));

  for (const vec3& a : h_axes()) CHECK_FALSE(in_stabilizer_octahedron(a));
  for (const vec3& a : t_axes()) CHECK_FALSE(in_stabilizer_octahedron(a));
  for (int axis = 0; axis < 3; ++axis)
    for (real s : {1.0, -1.0}) {
      vec3 v = vec3::Zero();
      v[axis] = s;
      CHECK(in_stabilizer_octahedron(v));
    }
}

TEST_CASE("axis families match the listed sign patterns") {
  REQUIRE(h_axes().size() == 12);
  REQUIRE(t_axes().size() == 8);
  for (const vec3& a : h_axes()) {
    CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // one component zero, the other two +-1/sqrt2
    int zeros = 0;
    for (int k = 0; k < 3; ++k)
      if (a[k] == 0.0)
        ++zeros;
      else
        CHECK(std::abs(a[k]) == doctest::Approx(1 / sqrt2).epsilon(1e-12));
    CHECK(zeros == 1);
  }
  for (const vec3& a : t_axes())
    for (int k = 0; k < 3; ++k) CHECK(std::abs(a[k]) == doctest::Approx(1 / sqrt3).epsilon(1e-12));
}

TEST_CASE("symmetrized polarization") {
  CHECK(symmetrized_polarization(vec3(-1 / sqrt2, 0, -1 / sqrt2), MagicFamily::H) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(symmetrized_polarization(vec3(0, 0, 0), MagicFamily::T) == doctest::Approx(0.0));

  // brute-force maximum over the eight T axes
  const vec3 s(0.6, 0.5, 0.4);
  real best = -2.0;
  for (real sx : {1.0, -1.0})
    for (real sy : {1.0, -1.0})
      for (real sz : {1.0, -1.0})
        best = std::max(best, (sx * s.x() + sy * s.y() + sz * s.z()) / sqrt3);
  CHECK(symmetrized_polarization(s, MagicFamily::T) == doctest::Approx(best).epsilon(1e-12));

  const CounterRng rng{11, 0};
  for (int i = 0; i < 100; ++i) {
    const vec3 v(rng.uniform(3 * i, -0.6, 0.6), rng.uniform(3 * i + 1, -0.6, 0.6),
                 rng.uniform(3 * i + 2, -0.6, 0.6));
    CHECK(symmetrized_polarization(v, MagicFamily::H) >= polarization_h(v) - 1e-12);
    CHECK(symmetrized_polarization(v, MagicFamily::T) >= polarization_t(v) - 1e-12);
  }
}

TEST_CASE("T twirl") {
  const vec3 t_state(1 / sqrt3, 1 / sqrt3, 1 / sqrt3);
  CHECK((twirl_t(t_state) - t_state).norm() < 1e-15);
  CHECK((twirl_t(vec3(1, 0, 0)) - vec3(1.0 / 3, 1.0 / 3, 1.0 / 3)).norm() < 1e-15);

  // H-axis state loses exactly sqrt(2/3) of its polarization
  const vec3 h_state(1 / sqrt2, 0, 1 / sqrt2);
  CHECK(polarization_t(twirl_t(h_state)) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("H twirl") {
  const vec3 h_state(1 / sqrt2, 0, 1 / sqrt2);
  CHECK((twirl_h(h_state) - h_state).norm() < 1e-15);
  CHECK((twirl_h(vec3(0, 1, 0))).norm() < 1e-15);
  const vec3 mapped = twirl_h(vec3(1, 0, 0));
  CHECK((mapped - vec3(0.5, 0, 0.5)).norm() < 1e-15);
  CHECK(polarization_h(mapped) == doctest::Approx(1 / sqrt2).epsilon(1e-12));
}

TEST_CASE("twirl projections: idempotence, preservation, conversion factor") {
  const CounterRng rng{12, 0};
  std::uint64_t c = 0;
  for (int i = 0; i < 200; ++i) {
    const vec3 s(rng.uniform(c++, -0.57, 0.57), rng.uniform(c++, -0.57, 0.57), rng.uniform(c++, -0.57, 0.57));
    CHECK((twirl_t(twirl_t(s)) - twirl_t(s)).norm() < 1e-15);
    CHECK((twirl_h(twirl_h(s)) - twirl_h(s)).norm() < 1e-15);
    CHECK(polarization_t(twirl_t(s)) == doctest::Approx(polarization_t(s)).epsilon(1e-12));
    CHECK(polarization_h(twirl_h(s)) == doctest::Approx(polarization_h(s)).epsilon(1e-12));

    const real h = rng.uniform(c++, -1.0, 1.0);
    const vec3 on_axis = state_on_axis(canonical_h_axis(), h);
    CHECK(polarization_t(twirl_t(on_axis)) ==
          doctest::Approx(std::sqrt(2.0 / 3.0) * polarization_h(on_axis)).epsilon(1e-12));
  }
}

TEST_CASE("polarization is linear") {
  const CounterRng rng{13, 0};
  std::uint64_t c = 0;
  for (int i = 0; i < 200; ++i) {
    const vec3 s1(rng.uniform(c++, -0.5, 0.5), rng.uniform(c++, -0.5, 0.5), rng.uniform(c++, -0.5, 0.5));
    const vec3 s2(rng.uniform(c++, -0.5, 0.5), rng.uniform(c++, -0.5, 0.5), rng.uniform(c++, -0.5, 0.5));
    const real alpha = rng.uniform01(c++);
    const vec3 mix = alpha * s1 + (1 - alpha) * s2;
    CHECK(polarization_h(mix) ==
          doctest::Approx(alpha * polarization_h(s1) + (1 - alpha) * polarization_h(s2)).epsilon(1e-12));
    CHECK(polarization_t(mix) ==
          doctest::Approx(alpha * polarization_t(s1) + (1 - alpha) * polarization_t(s2)).epsilon(1e-12));
  }
}

TEST_CASE("state_on_axis") {
  const vec3 s = state_on_axis(canonical_h_axis(), 0.826);
  CHECK(s.x() == doctest::Approx(0.826 / sqrt2).epsilon(1e-12));
  CHECK(s.y() == 0.0);
  CHECK(s.z() == doctest::Approx(0.826 / sqrt2).epsilon(1e-12));
  CHECK(polarization(s, canonical_h_axis()) == doctest::Approx(0.826).epsilon(1e-12));

  CHECK(state_on_axis(canonical_t_axis(), 0.0).norm() == 0.0);
  CHECK((state_on_axis(canonical_t_axis(), 1.0) - vec3(1 / sqrt3, 1 / sqrt3, 1 / sqrt3)).norm() < 1e-15);
  CHECK_THROWS_AS(state_on_axis(canonical_h_axis(), 1.2), std::invalid_argument);
}

TEST_CASE("region predicates") {
  CHECK(in_region_at(state_on_axis(canonical_t_axis(), 0.7)));
  CHECK_FALSE(in_region_at(state_on_axis(canonical_t_axis(), 0.6)));
  CHECK(in_region_ah(state_on_axis(canonical_h_axis(), 0.75)));
  CHECK_FALSE(in_region_ah(state_on_axis(canonical_h_axis(), 0.70)));
  // reflected axis states are picked up only by the symmetrized variants
  const vec3 mirrored = -state_on_axis(canonical_t_axis(), 0.9);
  CHECK_FALSE(in_region_at(mirrored));
  CHECK(in_region_at_symmetrized(mirrored));
  CHECK(in_region_ah_symmetrized(-state_on_axis(canonical_h_axis(), 0.9)));
}
