#include "msd/codes.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "msd/errors.hpp"

namespace msd {

namespace {

// Signed permutation matrices with determinant +1: the Bloch rotations of the
// single-qubit Clifford group.  Identity comes first so argmax ties resolve to it.
std::vector<std::pair<mat3, std::string>> build_clifford_rotations() {
  static const char axis_name[3] = {'x', 'y', 'z'};
  std::vector<std::pair<mat3, std::string>> out;
  std::array<int, 3> perm = {0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(perms.begin(), perms.end());
  for (const auto& pm : perms) {
    for (int sbits = 0; sbits < 8; ++sbits) {
      mat3 r = mat3::Zero();
      std::string tag = "(x,y,z)->(";
      for (int row = 0; row < 3; ++row) {
        const int sign = (sbits >> row) & 1 ? -1 : +1;
        r(row, pm[row]) = sign;
        if (row) tag += ',';
        if (sign < 0) tag += '-';
        tag += axis_name[pm[row]];
      }
      tag += ')';
      if (r.determinant() > 0.5) out.emplace_back(r, tag);
    }
  }
  return out;
}

// Logical Y = i * logical_x * logical_z, with the Pauli phase folded into the sign.
PauliString logical_y_of(const CodeSpec& code) {
  const int n = code.logical_x.size();
  PauliString out;
  out.letters.resize(n);
  int phase = 1;  // exponent of i, mod 4; starts at 1 for the leading i
  for (int q = 0; q < n; ++q) {
    char a = code.logical_x.letters[q], b = code.logical_z.letters[q];
    if (a == 'I') {
      out.letters[q] = b;
    } else if (b == 'I') {
      out.letters[q] = a;
    } else if (a == b) {
      out.letters[q] = 'I';
    } else {
      auto cyc = [](char u, char v) {
        return (u == 'X' && v == 'Y') || (u == 'Y' && v == 'Z') || (u == 'Z' && v == 'X');
      };
      out.letters[q] = static_cast<char>('X' ^ 'Y' ^ 'Z' ^ a ^ b);
      phase = (phase + (cyc(a, b) ? 1 : 3)) % 4;
    }
  }
  if (phase == 1 || phase == 3) throw std::logic_error("logical Y has a non-real phase");
  out.sign = code.logical_x.sign * code.logical_z.sign * (phase == 2 ? -1 : +1);
  return out;
}

vec3 raw_logical_bloch(const CodeSpec& code, const cmat& projected, real weight) {
  const PauliString ly = logical_y_of(code);
  return vec3(expectation(projected, code.logical_x), expectation(projected, ly),
              expectation(projected, code.logical_z)) /
         weight;
}

mat3 calibrate_output_correction(const CodeSpec& code, std::string& tag) {
  // Reference input: equal copies at p = 0.9 on the protocol axis.
  const std::vector<vec3> inputs(code.n, state_on_axis(code.axis, 0.9));
  const cmat rho = product_state(inputs);
  const cmat& proj = trivial_syndrome_projector(code);
  const cmat projected = proj * rho * proj;
  const real weight = projected.trace().real();
  if (weight < impossible_outcome_eps) throw std::logic_error("calibration input has zero syndrome weight");
  const vec3 raw = raw_logical_bloch(code, projected, weight);

  real best = -2.0;
  mat3 best_r = mat3::Identity();
  for (const auto& [r, name] : clifford_bloch_rotations()) {
    const real p = polarization(vec3(r * raw), code.axis);
    if (p > best + 1e-12) {
      best = p;
      best_r = r;
      tag = name;
    }
  }
  return best_r;
}

CodeSpec make_five_qubit_code() {
  CodeSpec c;
  c.name = "five_qubit";
  c.n = 5;
  c.generators = {pauli("XZZXI"), pauli("IXZZX"), pauli("XIXZZ"), pauli("ZXIXZ")};
  c.logical_x = pauli("XXXXX");
  c.logical_z = pauli("ZZZZZ");
  c.axis = canonical_t_axis();
  c.output_correction = mat3::Identity();
  validate_code(c);
  c.output_correction = calibrate_output_correction(c, c.correction_tag);
  return c;
}

CodeSpec make_steane_code() {
  CodeSpec c;
  c.name = "steane";
  c.n = 7;
  c.generators = {pauli("IIIXXXX"), pauli("IXXIIXX"), pauli("XIXIXIX"),
                  pauli("IIIZZZZ"), pauli("IZZIIZZ"), pauli("ZIZIZIZ")};
  c.logical_x = pauli("XXXXXXX");
  c.logical_z = pauli("ZZZZZZZ");
  c.axis = canonical_h_axis();
  c.output_correction = mat3::Identity();
  validate_code(c);
  c.output_correction = calibrate_output_correction(c, c.correction_tag);
  return c;
}

}  // namespace

const std::vector<std::pair<mat3, std::string>>& clifford_bloch_rotations() {
  static const auto rotations = build_clifford_rotations();
  return rotations;
}

void validate_code(const CodeSpec& code) {
  const int k = static_cast<int>(code.generators.size());
  for (const auto& g : code.generators)
    if (g.size() != code.n) throw std::invalid_argument(code.name + ": generator length mismatch");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!commutes(code.generators[i], code.generators[j]))
        throw std::invalid_argument(code.name + ": generators do not commute");
  if (symplectic_rank(code.generators) != k)
    throw std::invalid_argument(code.name + ": generators are not independent");
  for (const auto& g : code.generators) {
    if (!commutes(code.logical_x, g) || !commutes(code.logical_z, g))
      throw std::invalid_argument(code.name + ": logical operators must commute with the stabilizer");
  }
  if (commutes(code.logical_x, code.logical_z))
    throw std::invalid_argument(code.name + ": logical X and Z must anticommute");
}

const cmat& trivial_syndrome_projector(const CodeSpec& code) {
  static std::unordered_map<std::string, cmat> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(code.name);
  if (it != cache.end()) return it->second;
  const Eigen::Index dim = Eigen::Index(1) << code.n;
  cmat proj = cmat::Identity(dim, dim);
  for (const auto& g : code.generators)
    proj = 0.5 * (proj + proj * pauli_matrix(g)).eval();
  return cache.emplace(code.name, std::move(proj)).first->second;
}

const CodeSpec& five_qubit_code() {
  static const CodeSpec code = make_five_qubit_code();
  return code;
}

const CodeSpec& steane_code() {
  static const CodeSpec code = make_steane_code();
  return code;
}

std::pair<vec3, real> code_distill(const CodeSpec& code, const std::vector<vec3>& inputs) {
  if (static_cast<int>(inputs.size()) != code.n)
    throw std::invalid_argument(code.name + ": expected " + std::to_string(code.n) + " input copies");
  const cmat rho = product_state(inputs);
  const cmat& proj = trivial_syndrome_projector(code);
  const cmat projected = proj * rho * proj;
  const real weight = projected.trace().real();
  if (weight < impossible_outcome_eps) throw ImpossibleOutcome(code.name + ": trivial syndrome has zero weight");
  const vec3 raw = raw_logical_bloch(code, projected, weight);
  const vec3 corrected = code.output_correction * raw;
  const vec3 out = code.axis.family == MagicFamily::T ? twirl_t(corrected) : twirl_h(corrected);
  return {out, weight};
}

std::pair<real, real> code_distill_polarization(const CodeSpec& code, real p) {
  if (std::abs(p) > 1.0) throw std::invalid_argument("code_distill_polarization: |p| > 1");
  const std::vector<vec3> inputs(code.n, state_on_axis(code.axis, p));
  auto [out, theta] = code_distill(code, inputs);
  return {polarization(out, code.axis), theta};
}

}  // namespace msd
