#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msd/bloch.hpp"
#include "msd/density.hpp"
#include "msd/pauli.hpp"
#include "msd/types.hpp"

namespace msd {

/// Stabilizer-code description used by the one-round distillation oracle.
/// The output correction is the single-qubit Clifford (as a Bloch rotation)
/// that maps the decoded logical vector back onto the protocol axis; it is
/// chosen once per code by maximizing the output polarization at a reference
/// input of p = 0.9 and then frozen here.
struct CodeSpec {
  std::string name;
  int n = 0;
  std::vector<PauliString> generators;
  PauliString logical_x;
  PauliString logical_z;
  MagicAxis axis;             // protocol axis (T for the 5-qubit code, H for Steane)
  mat3 output_correction;     // Bloch rotation of the correction Clifford
  std::string correction_tag; // human-readable form, e.g. "(x,y,z)->(-y,-x,-z)"
};

/// Validates commutation, independence, and the logical-operator algebra.
void validate_code(const CodeSpec& code);

/// The [[5,1,3]] code with cyclic generators XZZXI...; T-type protocol.
const CodeSpec& five_qubit_code();

/// The [[7,1,3]] Steane code; H-type protocol.
const CodeSpec& steane_code();

/// Trivial-syndrome projector of the code (product of (1+g)/2 over generators).
const cmat& trivial_syndrome_projector(const CodeSpec& code);

/// One distillation round: project the n-copy product state onto the trivial
/// syndrome, renormalize, read the logical Bloch vector, apply the frozen
/// output correction and the axis twirl.  Returns the output Bloch vector and
/// the success probability; throws ImpossibleOutcome for zero projection weight.
std::pair<vec3, real> code_distill(const CodeSpec& code, const std::vector<vec3>& inputs);

/// Convenience: equal copies with polarization p on the code's axis.
std::pair<real, real> code_distill_polarization(const CodeSpec& code, real p);

/// The 24 single-qubit Clifford Bloch rotations in a fixed enumeration order.
const std::vector<std::pair<mat3, std::string>>& clifford_bloch_rotations();

}  // namespace msd
