#pragma once

#include <utility>
#include <vector>

#include "msd/pauli.hpp"
#include "msd/types.hpp"

namespace msd {

// Dense density-matrix simulator for up to 8 qubits.  Matrices are plain
// Eigen::MatrixXcd of size 2^n; qubit 0 is the most significant index bit.

inline constexpr int max_oracle_qubits = 8;
inline constexpr real impossible_outcome_eps = 1e-14;

int qubit_count(const cmat& rho);

/// rho = (1 + x sx + y sy + z sz)/2; rejects vectors outside the Bloch ball.
cmat density_from_bloch(const vec3& s);

/// (Tr rho sx, Tr rho sy, Tr rho sz) of a one-qubit state.
vec3 bloch_from_density(const cmat& rho);

/// Tensor product of the given single-qubit states, first state most significant.
cmat product_state(const std::vector<vec3>& states);

cmat kron(const cmat& a, const cmat& b);

/// Expectation Tr(rho P).
real expectation(const cmat& rho, const PauliString& p);

/// Projective measurement of a Pauli observable, keeping the +1 or -1 outcome.
/// Returns the renormalized post-measurement state and the Born probability;
/// throws ImpossibleOutcome when the branch has numerically zero weight.
std::pair<cmat, real> measure_projective(const cmat& rho, const PauliString& observable, int keep);

/// Reduced one-qubit state of `qubit`, tracing out the rest.
cmat reduce_to_qubit(const cmat& rho, int qubit);

bool is_hermitian(const cmat& rho, real tol = 1e-10);
bool has_unit_trace(const cmat& rho, real tol = 1e-10);
/// Eigenvalue floor check; the -1e-9 default absorbs rounding in 7-qubit projections.
bool is_positive_semidefinite(const cmat& rho, real floor = -1e-9);

}  // namespace msd
