#include "msd/circuit4.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "msd/bloch.hpp"
#include "msd/density.hpp"
#include "msd/maps.hpp"

namespace msd {

namespace {

constexpr int n_wires = 4;
constexpr Eigen::Index dim = 16;

// Full-register unitary of a 2x2 gate on one wire (wire 0 = most significant bit).
cmat embed_one_qubit(const cmat2& gate, int wire) {
  const int shift = n_wires - 1 - wire;
  cmat u = cmat::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int bit = static_cast<int>((col >> shift) & 1);
    for (int row_bit = 0; row_bit < 2; ++row_bit) {
      const Eigen::Index row = (col & ~(Eigen::Index(1) << shift)) | (Eigen::Index(row_bit) << shift);
      u(row, col) = gate(row_bit, bit);
    }
  }
  return u;
}

cmat embed_cnot(int control, int target) {
  const int cs = n_wires - 1 - control;
  const int ts = n_wires - 1 - target;
  cmat u = cmat::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index row = col;
    if ((col >> cs) & 1) row = col ^ (Eigen::Index(1) << ts);
    u(row, col) = 1.0;
  }
  return u;
}

const cmat2& hadamard() {
  static const cmat2 h = [] {
    cmat2 m;
    m << 1, 1, 1, -1;
    return cmat2(m / sqrt2);
  }();
  return h;
}

cmat layout_unitary(const ParityLayout& layout) {
  cmat u = cmat::Identity(dim, dim);
  for (const ParityCheck& c : layout.checks) {
    if (c.basis == ParityCheck::Basis::ZZ) {
      // CNOT partner->recorder; Z on the recorder then reads Z_partner Z_recorder.
      u = embed_cnot(c.partner, c.recorder) * u;
    } else {
      // CNOT recorder->partner then H on the recorder reads X_partner X_recorder.
      u = embed_one_qubit(hadamard(), c.recorder) * embed_cnot(c.recorder, c.partner) * u;
    }
  }
  return u;
}

bool valid_layout(const ParityLayout& layout) {
  bool seen[n_wires] = {false, false, false, false};
  for (const ParityCheck& c : layout.checks) {
    if (c.recorder <= 0 || c.recorder >= n_wires) return false;
    if (c.partner < 0 || c.partner >= n_wires || c.partner == c.recorder) return false;
    if (seen[c.recorder]) return false;
    seen[c.recorder] = true;
  }
  return seen[1] && seen[2] && seen[3];
}

// Equal-input check against the closed-form one-round map.
bool matches_closed_form(const ParityLayout& layout, const std::vector<real>& grid, real tol) {
  for (real p : grid) {
    const vec3 s = state_on_axis(canonical_h_axis(), p);
    const OutcomeTable t = h4_circuit_with_layout(layout, {s, s, s, s});
    const StepResult want = h4_map(p);
    if (std::abs(t.theta[0] - want.theta) > tol) return false;
    if (!t.defined[0] || std::abs(t.success_polarization() - want.p_out) > tol) return false;
  }
  return true;
}

ParityLayout search_layout() {
  const std::vector<real> coarse = {0.3, 0.9};
  const std::vector<real> full = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  using Basis = ParityCheck::Basis;
  for (int r1 = 1; r1 < n_wires; ++r1)
    for (int r2 = 1; r2 < n_wires; ++r2)
      for (int r3 = 1; r3 < n_wires; ++r3) {
        if (r1 == r2 || r1 == r3 || r2 == r3) continue;
        for (int p1 = 0; p1 < n_wires; ++p1)
          for (int p2 = 0; p2 < n_wires; ++p2)
            for (int p3 = 0; p3 < n_wires; ++p3)
              for (Basis b1 : {Basis::ZZ, Basis::XX})
                for (Basis b2 : {Basis::ZZ, Basis::XX})
                  for (Basis b3 : {Basis::ZZ, Basis::XX}) {
                    const ParityLayout layout{{ParityCheck{b1, p1, r1}, ParityCheck{b2, p2, r2},
                                               ParityCheck{b3, p3, r3}}};
                    if (!valid_layout(layout)) continue;
                    if (!matches_closed_form(layout, coarse, 1e-10)) continue;
                    if (matches_closed_form(layout, full, 1e-10)) return layout;
                  }
      }
  throw std::logic_error("h4 calibration: no parity-check layout reproduces the closed-form map");
}

}  // namespace

const ParityLayout& calibrated_h4_layout() {
  static const ParityLayout layout = search_layout();
  return layout;
}

OutcomeTable h4_circuit_with_layout(const ParityLayout& layout, const std::array<vec3, 4>& inputs) {
  const cmat rho_in = product_state({inputs[0], inputs[1], inputs[2], inputs[3]});
  const cmat u = layout_unitary(layout);
  const cmat rho = u * rho_in * u.adjoint();

  OutcomeTable table;
  for (int outcome = 0; outcome < 8; ++outcome) {
    // Outcome bits in wire order: wire 1 is the most significant.
    real prob = 0.0;
    cmat survivor = cmat::Zero(2, 2);
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (static_cast<int>(r & 7) != outcome) continue;
      for (int sb = 0; sb < 2; ++sb) {
        const Eigen::Index c = Eigen::Index(outcome) | (Eigen::Index(sb) << 3);
        survivor(static_cast<int>(r >> 3), sb) += rho(r, c);
      }
      prob += rho(r, r).real();
    }
    table.theta[outcome] = std::max(prob, 0.0);
    if (prob < impossible_outcome_eps) {
      table.defined[outcome] = false;
      table.x[outcome] = std::numeric_limits<real>::quiet_NaN();
      table.z[outcome] = std::numeric_limits<real>::quiet_NaN();
      continue;
    }
    const vec3 branch = twirl_h(bloch_from_density(cmat(survivor / prob)));
    table.defined[outcome] = true;
    table.x[outcome] = branch.x();
    table.z[outcome] = branch.z();
  }
  return table;
}

OutcomeTable h4_circuit(const std::array<vec3, 4>& inputs) {
  for (const vec3& s : inputs)
    if (!is_physical(s)) throw std::invalid_argument("h4_circuit: input outside the Bloch ball");
  return h4_circuit_with_layout(calibrated_h4_layout(), inputs);
}

}  // namespace msd
