#pragma once

#include <string>
#include <vector>

#include "msd/types.hpp"

namespace msd {

/// Signed tensor product of single-qubit Pauli operators, e.g. -XZZXI.
/// Qubit 0 is the leftmost letter and the most significant bit of matrix indices.
struct PauliString {
  std::string letters;  // over {I, X, Y, Z}
  int sign = +1;        // +1 or -1

  int size() const { return static_cast<int>(letters.size()); }
  int weight() const;
};

/// Parse "XZZXI" or "-XZZXI"; validates the alphabet.
PauliString pauli(const std::string& text);

/// Hermitian 2^n x 2^n matrix of the string (including its sign).
cmat pauli_matrix(const PauliString& p);

bool commutes(const PauliString& a, const PauliString& b);

/// Product ab with the accumulated Pauli phase; throws unless the phase is +-1
/// (products of commuting Hermitian strings always are).
PauliString pauli_product(const PauliString& a, const PauliString& b);

/// GF(2) symplectic rank of the set; independent iff rank == size().
int symplectic_rank(const std::vector<PauliString>& ops);

const cmat2& sigma_x();
const cmat2& sigma_y();
const cmat2& sigma_z();

}  // namespace msd
