#pragma once

#include <stdexcept>
#include <string>

namespace msd {

/// A post-selected measurement branch whose Born probability is numerically zero.
struct ImpossibleOutcome : std::runtime_error {
  explicit ImpossibleOutcome(const std::string& what) : std::runtime_error(what) {}
};

/// Input state fails every routing predicate of the hybrid protocol.
struct NotDistillable : std::runtime_error {
  NotDistillable(const std::string& what, double p_h, double p_t, bool inside_octahedron)
      : std::runtime_error(what), p_h(p_h), p_t(p_t), inside_octahedron(inside_octahedron) {}
  double p_h;
  double p_t;
  bool inside_octahedron;
};

/// Requested target polarization lies beyond the reach of the chosen protocol.
struct UnreachableTarget : std::runtime_error {
  explicit UnreachableTarget(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace msd
