#include "msd/pauli.hpp"

#include <stdexcept>

namespace msd {

namespace {

const cmat2& letter_matrix(char c) {
  static const cmat2 id = cmat2::Identity();
  switch (c) {
    case 'I': return id;
    case 'X': return sigma_x();
    case 'Y': return sigma_y();
    case 'Z': return sigma_z();
    default: throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
  }
}

// Single-qubit product c = a*b as (phase exponent of i, letter).
std::pair<int, char> letter_product(char a, char b) {
  if (a == 'I') return {0, b};
  if (b == 'I') return {0, a};
  if (a == b) return {0, 'I'};
  // XY=iZ, YZ=iX, ZX=iY and the reversed orders pick up -i.
  auto cyclic = [](char u, char v) { return (u == 'X' && v == 'Y') || (u == 'Y' && v == 'Z') || (u == 'Z' && v == 'X'); };
  char third = 'X' ^ 'Y' ^ 'Z' ^ a ^ b;
  return {cyclic(a, b) ? 1 : 3, third};
}

}  // namespace

const cmat2& sigma_x() {
  static const cmat2 m = (cmat2() << 0, 1, 1, 0).finished();
  return m;
}
const cmat2& sigma_y() {
  static const cmat2 m = (cmat2() << complex(0, 0), complex(0, -1), complex(0, 1), complex(0, 0)).finished();
  return m;
}
const cmat2& sigma_z() {
  static const cmat2 m = (cmat2() << 1, 0, 0, -1).finished();
  return m;
}

int PauliString::weight() const {
  int w = 0;
  for (char c : letters)
    if (c != 'I') ++w;
  return w;
}

PauliString pauli(const std::string& text) {
  PauliString p;
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    p.sign = text[0] == '-' ? -1 : +1;
    start = 1;
  }
  p.letters = text.substr(start);
  if (p.letters.empty()) throw std::invalid_argument("empty Pauli string");
  for (char c : p.letters)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
  return p;
}

cmat pauli_matrix(const PauliString& p) {
  cmat m = cmat::Identity(1, 1);
  for (char c : p.letters) {
    const cmat2& g = letter_matrix(c);
    cmat next(m.rows() * 2, m.cols() * 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = g(i, j) * m;
    m.swap(next);
  }
  return static_cast<real>(p.sign) * m;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Pauli length mismatch");
  int anti = 0;
  for (int i = 0; i < a.size(); ++i) {
    char u = a.letters[i], v = b.letters[i];
    if (u != 'I' && v != 'I' && u != v) ++anti;
  }
  return anti % 2 == 0;
}

PauliString pauli_product(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Pauli length mismatch");
  PauliString out;
  out.letters.resize(a.letters.size());
  int phase = 0;  // exponent of i, mod 4
  for (int i = 0; i < a.size(); ++i) {
    auto [ph, c] = letter_product(a.letters[i], b.letters[i]);
    phase = (phase + ph) % 4;
    out.letters[i] = c;
  }
  if (phase == 1 || phase == 3) throw std::invalid_argument("pauli_product: non-real phase");
  out.sign = a.sign * b.sign * (phase == 2 ? -1 : +1);
  return out;
}

int symplectic_rank(const std::vector<PauliString>& ops) {
  if (ops.empty()) return 0;
  const int n = ops.front().size();
  std::vector<std::vector<int>> rows;
  for (const auto& p : ops) {
    std::vector<int> r(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      char c = p.letters[i];
      if (c == 'X' || c == 'Y') r[i] = 1;
      if (c == 'Z' || c == 'Y') r[n + i] = 1;
    }
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < 2 * n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && rows[r][col])
        for (int c = 0; c < 2 * n; ++c) rows[r][c] ^= rows[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace msd
