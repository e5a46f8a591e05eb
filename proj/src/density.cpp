#include "msd/density.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "msd/bloch.hpp"
#include "msd/errors.hpp"

namespace msd {

int qubit_count(const cmat& rho) {
  if (rho.rows() != rho.cols() || rho.rows() < 2) throw std::invalid_argument("density matrix must be square");
  int n = 0;
  Eigen::Index d = rho.rows();
  while (d > 1) {
    if (d % 2 != 0) throw std::invalid_argument("density matrix dimension is not a power of two");
    d /= 2;
    ++n;
  }
  return n;
}

cmat density_from_bloch(const vec3& s) {
  if (!is_physical(s)) throw std::invalid_argument("density_from_bloch: |s| > 1");
  cmat rho(2, 2);
  rho(0, 0) = complex(1.0 + s.z(), 0.0);
  rho(0, 1) = complex(s.x(), -s.y());
  rho(1, 0) = complex(s.x(), s.y());
  rho(1, 1) = complex(1.0 - s.z(), 0.0);
  return 0.5 * rho;
}

vec3 bloch_from_density(const cmat& rho) {
  if (qubit_count(rho) != 1) throw std::invalid_argument("bloch_from_density: expected a one-qubit state");
  return vec3(2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real());
}

cmat kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

cmat product_state(const std::vector<vec3>& states) {
  if (states.empty() || static_cast<int>(states.size()) > max_oracle_qubits)
    throw std::invalid_argument("product_state: need between 1 and 8 qubits");
  cmat rho = density_from_bloch(states.front());
  for (std::size_t k = 1; k < states.size(); ++k) rho = kron(rho, density_from_bloch(states[k]));
  return rho;
}

real expectation(const cmat& rho, const PauliString& p) {
  if ((Eigen::Index(1) << p.size()) != rho.rows()) throw std::invalid_argument("expectation: size mismatch");
  return (rho * pauli_matrix(p)).trace().real();
}

std::pair<cmat, real> measure_projective(const cmat& rho, const PauliString& observable, int keep) {
  if (keep != +1 && keep != -1) throw std::invalid_argument("measure_projective: keep must be +-1");
  if ((Eigen::Index(1) << observable.size()) != rho.rows())
    throw std::invalid_argument("measure_projective: observable length mismatch");
  const cmat p = pauli_matrix(observable);
  const cmat proj = 0.5 * (cmat::Identity(rho.rows(), rho.cols()) + static_cast<real>(keep) * p);
  cmat branch = proj * rho * proj;
  const real prob = branch.trace().real();
  if (prob < impossible_outcome_eps) throw ImpossibleOutcome("measurement branch has zero probability");
  branch /= prob;
  return {std::move(branch), prob};
}

cmat reduce_to_qubit(const cmat& rho, int qubit) {
  const int n = qubit_count(rho);
  if (qubit < 0 || qubit >= n) throw std::invalid_argument("reduce_to_qubit: qubit out of range");
  const int shift = n - 1 - qubit;  // bit position of `qubit` within an index
  const Eigen::Index dim = rho.rows();
  cmat out = cmat::Zero(2, 2);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const int rb = static_cast<int>((r >> shift) & 1);
    for (int cb = 0; cb < 2; ++cb) {
      const Eigen::Index c = (r & ~(Eigen::Index(1) << shift)) | (Eigen::Index(cb) << shift);
      out(rb, cb) += rho(r, c);
    }
  }
  return out;
}

bool is_hermitian(const cmat& rho, real tol) { return (rho - rho.adjoint()).cwiseAbs().maxCoeff() <= tol; }

bool has_unit_trace(const cmat& rho, real tol) { return std::abs(rho.trace() - complex(1.0, 0.0)) <= tol; }

bool is_positive_semidefinite(const cmat& rho, real floor) {
  Eigen::SelfAdjointEigenSolver<cmat> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= floor;
}

}  // namespace msd
