#pragma once

#include <array>
#include <cstdint>

#include "msd/types.hpp"

namespace msd {

/// Eight-outcome result of the 4-copy parity-check circuit: theta[i] is the
/// probability of reading |i> on the three measured qubits (most significant
/// bit = lowest measured wire) and (x[i], z[i]) are the Bloch components of
/// the surviving qubit after the H projection.  Branches with numerically
/// zero probability are marked undefined and carry NaN components.
struct OutcomeTable {
  std::array<real, 8> theta{};
  std::array<real, 8> x{};
  std::array<real, 8> z{};
  std::array<bool, 8> defined{};

  /// Branch-0 (all parities zero) output polarization along the H axis.
  real success_polarization() const { return (x[0] + z[0]) / sqrt2; }
};

/// One two-qubit parity check: basis XX or ZZ on wires {a, recorder}; the
/// recorder is consumed and read out in the computational basis at the end.
struct ParityCheck {
  enum class Basis : std::uint8_t { ZZ, XX };
  Basis basis;
  int partner;
  int recorder;
};

/// Three sequential parity checks; wire 0 survives, wires 1..3 record.
struct ParityLayout {
  std::array<ParityCheck, 3> checks;
};

/// Layout frozen by the calibration search: the first enumerated layout whose
/// equal-input map reproduces the closed-form polarization and success
/// probability on a grid to 1e-10.  Several wire relabelings produce the same
/// map; the enumeration order makes the choice deterministic.
const ParityLayout& calibrated_h4_layout();

/// Simulate the calibrated circuit on four (possibly unequal) input states.
OutcomeTable h4_circuit(const std::array<vec3, 4>& inputs);

/// Same, with an explicit layout (used by calibration and tests).
OutcomeTable h4_circuit_with_layout(const ParityLayout& layout, const std::array<vec3, 4>& inputs);

}  // namespace msd
