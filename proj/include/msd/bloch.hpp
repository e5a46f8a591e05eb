#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "msd/types.hpp"

namespace msd {

// Bloch-vector algebra for magic-state distillation. States are points of the
// unit ball; the two magic families are the Hadamard-eigenstate axes (12 of
// them) and the T-gate axes (8 of them).

enum class MagicFamily { H, T };

/// Unit direction of a magic axis plus the family it belongs to.
struct MagicAxis {
  vec3 dir;
  MagicFamily family;
};

inline bool is_physical(const vec3& s, real tol = 1e-9) { return s.squaredNorm() <= 1.0 + tol; }

inline MagicAxis canonical_h_axis() { return {vec3(1.0, 0.0, 1.0) / sqrt2, MagicFamily::H}; }
inline MagicAxis canonical_t_axis() { return {vec3(1.0, 1.0, 1.0) / sqrt3, MagicFamily::T}; }

/// General axis; direction must be unit length.
inline MagicAxis magic_axis(const vec3& dir, MagicFamily family) {
  if (std::abs(dir.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("magic_axis: direction must have unit norm");
  return {dir, family};
}

/// The 12 H-type axes: all permutations of (+-1/sqrt2, +-1/sqrt2, 0).
inline const std::array<vec3, 12>& h_axes() {
  static const std::array<vec3, 12> axes = [] {
    std::array<vec3, 12> a;
    int k = 0;
    const real r = 1.0 / sqrt2;
    for (real sa : {1.0, -1.0})
      for (real sb : {1.0, -1.0}) {
        a[k++] = vec3(0.0, sa * r, sb * r);
        a[k++] = vec3(sa * r, 0.0, sb * r);
        a[k++] = vec3(sa * r, sb * r, 0.0);
      }
    return a;
  }();
  return axes;
}

/// The 8 T-type axes: (+-1, +-1, +-1)/sqrt3.
inline const std::array<vec3, 8>& t_axes() {
  static const std::array<vec3, 8> axes = [] {
    std::array<vec3, 8> a;
    int k = 0;
    for (real sx : {1.0, -1.0})
      for (real sy : {1.0, -1.0})
        for (real sz : {1.0, -1.0}) a[k++] = vec3(sx, sy, sz) / sqrt3;
    return a;
  }();
  return axes;
}

/// Overlap polarization 2 Tr(rho * rho_axis) - 1 = <s, axis>.
inline real polarization(const vec3& s, const MagicAxis& axis) { return s.dot(axis.dir); }

/// Polarization along the canonical H axis, (x + z)/sqrt2.
inline real polarization_h(const vec3& s) { return (s.x() + s.z()) / sqrt2; }

/// Polarization along the canonical T axis, (x + y + z)/sqrt3.
inline real polarization_t(const vec3& s) { return (s.x() + s.y() + s.z()) / sqrt3; }

/// True iff |x| + |y| + |z| <= 1: inside (or on) the stabilizer octahedron,
/// hence not distillable by stabilizer operations.
inline bool in_stabilizer_octahedron(const vec3& s, real tol = 1e-12) {
  return std::abs(s.x()) + std::abs(s.y()) + std::abs(s.z()) <= 1.0 + tol;
}

/// Best polarization over the whole family of magic axes.
inline real symmetrized_polarization(const vec3& s, MagicFamily family) {
  real best = -2.0;
  if (family == MagicFamily::H) {
    for (const vec3& a : h_axes()) best = std::max(best, s.dot(a));
  } else {
    for (const vec3& a : t_axes()) best = std::max(best, s.dot(a));
  }
  return best;
}

/// T-projection D_T(rho) = (rho + T rho T+ + T+ rho T)/3.  On Bloch vectors the
/// T gate cyclically permutes the axes, so the image is the component average
/// along (1,1,1).  Preserves p_T; maps H-axis polarization h to p_T = h*sqrt(2/3).
inline vec3 twirl_t(const vec3& s) {
  const real m = (s.x() + s.y() + s.z()) / 3.0;
  return vec3(m, m, m);
}

/// H-projection D_H(rho) = (rho + H rho H+)/2: Bloch map (x,y,z) -> ((x+z)/2, 0, (x+z)/2).
/// Preserves p_H; idempotent.
inline vec3 twirl_h(const vec3& s) {
  const real m = (s.x() + s.z()) / 2.0;
  return vec3(m, 0.0, m);
}

/// State with polarization p along the given axis.
inline vec3 state_on_axis(const MagicAxis& axis, real p) {
  if (std::abs(p) > 1.0)
    throw std::invalid_argument("state_on_axis: |p| > 1 is unphysical (p = " + std::to_string(p) + ")");
  return p * axis.dir;
}

// Distillable-range predicates of the two iterated protocols, stated on the
// canonical octant via canonical-axis polarizations.  Symmetrized variants
// answer full-ball queries; neither is asserted as the figure-exact boundary.

inline const real t5_threshold_polarization = std::sqrt(3.0 / 7.0);
inline const real h7_threshold_polarization = 1.0 / sqrt2;

inline bool in_region_at(const vec3& s) { return polarization_t(s) > t5_threshold_polarization; }
inline bool in_region_ah(const vec3& s) { return polarization_h(s) > h7_threshold_polarization; }

inline bool in_region_at_symmetrized(const vec3& s) {
  return symmetrized_polarization(s, MagicFamily::T) > t5_threshold_polarization;
}
inline bool in_region_ah_symmetrized(const vec3& s) {
  return symmetrized_polarization(s, MagicFamily::H) > h7_threshold_polarization;
}

}  // namespace msd
