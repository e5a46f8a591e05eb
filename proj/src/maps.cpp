#include "msd/maps.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "msd/codes.hpp"

namespace msd {

namespace {

real require_polarization(real p, const char* where) {
  if (std::abs(p) > 1.0)
    throw std::invalid_argument(std::string(where) + ": polarization must lie in [-1, 1], got " +
                                std::to_string(p));
  return p;
}

real bisect(const std::function<real(real)>& g, real lo, real hi, real tol) {
  real glo = g(lo);
  real ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if (glo * ghi > 0.0) throw std::logic_error("bisect: endpoints do not bracket a root");
  while (hi - lo > tol) {
    const real mid = 0.5 * (lo + hi);
    const real gm = g(mid);
    if (gm == 0.0) return mid;
    if (glo * gm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  return 0.5 * (lo + hi);
}

StepResult table_step(Protocol proto, const MapTable& table, real p) {
  require_polarization(p, protocol_name(proto));
  // The simulator maps are odd in p (theta is even); the table covers [0, 1].
  const real a = std::abs(p);
  const real sign = p < 0.0 ? -1.0 : 1.0;
  return {proto, p, sign * table.p_out(a), table.theta(a), protocol_copies(proto)};
}

// Least-squares fit of ln(eps_out - eps_star) against ln(eps - eps_star).
ConvergenceEstimate fit_loglog(const std::function<real(real)>& eps_map, real eps_star,
                               const std::vector<real>& offsets) {
  std::vector<real> lx, ly;
  for (real d : offsets) {
    const real y = eps_map(eps_star + d) - eps_star;
    if (y <= 0.0) throw std::logic_error("convergence_order: map not contracting at sampled offset");
    lx.push_back(std::log(d));
    ly.push_back(std::log(y));
  }
  const std::size_t n = lx.size();
  real sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const real denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) throw std::logic_error("convergence_order: degenerate fit grid");
  const real slope = (n * sxy - sx * sy) / denom;
  const real intercept = (sy - slope * sx) / n;
  return {slope, std::exp(intercept)};
}

std::vector<real> log_grid(real lo, real hi, int count) {
  std::vector<real> g(count);
  for (int i = 0; i < count; ++i)
    g[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (count - 1));
  return g;
}

}  // namespace

const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::H4: return "h4";
    case Protocol::T5: return "t5";
    case Protocol::H7: return "h7";
  }
  throw std::logic_error("unknown protocol");
}

int protocol_copies(Protocol p) {
  switch (p) {
    case Protocol::H4: return 4;
    case Protocol::T5: return 5;
    case Protocol::H7: return 7;
  }
  throw std::logic_error("unknown protocol");
}

Protocol protocol_from_name(const std::string& name) {
  if (name == "h4") return Protocol::H4;
  if (name == "t5") return Protocol::T5;
  if (name == "h7") return Protocol::H7;
  throw std::invalid_argument("unknown protocol '" + name + "' (expected h4, t5 or h7)");
}

StepResult h4_map(real p0) {
  require_polarization(p0, "h4_map");
  const real p2 = p0 * p0;
  const real p4 = p2 * p2;
  const real denom = 2.0 + 2.0 * p2 + p4;
  return {Protocol::H4, p0, (6.0 * p2 + p4) / (sqrt2 * denom), denom / 16.0, 4};
}

real h4_error_map(real eps) {
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("h4_error_map: eps must lie in [0, 1]");
  const real q = 1.0 - 2.0 * eps;
  const real q2 = q * q;
  const real q4 = q2 * q2;
  return 0.5 - (6.0 * q2 + q4) / (std::sqrt(8.0) * (2.0 + 2.0 * q2 + q4));
}

std::pair<real, real> h4_fixed_points() {
  static const std::pair<real, real> fp = [] {
    auto g = [](real p) { return h4_map(p).p_out - p; };
    return std::pair<real, real>{bisect(g, 0.5, 0.8, 1e-10), bisect(g, 0.8, 0.999, 1e-10)};
  }();
  return fp;
}

std::pair<real, real> t5_exact(real p) {
  return code_distill_polarization(five_qubit_code(), require_polarization(p, "t5_exact"));
}

std::pair<real, real> h7_exact(real p) {
  return code_distill_polarization(steane_code(), require_polarization(p, "h7_exact"));
}

const MapTable& t5_table() {
  static const MapTable table = MapTable::load_or_build(
      "t5", default_map_grid, default_cache_dir(), [](real p) { return t5_exact(p); });
  return table;
}

const MapTable& h7_table() {
  static const MapTable table = MapTable::load_or_build(
      "h7", default_map_grid, default_cache_dir(), [](real p) { return h7_exact(p); });
  return table;
}

StepResult t5_map(real p) { return table_step(Protocol::T5, t5_table(), p); }
StepResult h7_map(real p) { return table_step(Protocol::H7, h7_table(), p); }

StepResult protocol_map(Protocol proto, real p) {
  switch (proto) {
    case Protocol::H4: return h4_map(p);
    case Protocol::T5: return t5_map(p);
    case Protocol::H7: return h7_map(p);
  }
  throw std::logic_error("unknown protocol");
}

real t5_threshold() {
  static const real value =
      bisect([](real p) { return t5_exact(p).first - p; }, 0.55, 0.75, 1e-10);
  return value;
}

real h7_threshold() {
  static const real value =
      bisect([](real p) { return h7_exact(p).first - p; }, 0.6, 0.8, 1e-10);
  return value;
}

ConvergenceEstimate convergence_order(Protocol proto) {
  switch (proto) {
    case Protocol::H4: {
      const real eps_star = (1.0 - h4_fixed_points().second) / 2.0;
      return fit_loglog([](real e) { return h4_error_map(e); }, eps_star, log_grid(1e-6, 1e-4, 9));
    }
    case Protocol::T5:
      return fit_loglog([](real e) { return (1.0 - t5_exact(1.0 - 2.0 * e).first) / 2.0; }, 0.0,
                        log_grid(1e-3, 3e-2, 9));
    case Protocol::H7:
      return fit_loglog([](real e) { return (1.0 - h7_exact(1.0 - 2.0 * e).first) / 2.0; }, 0.0,
                        log_grid(1e-4, 1e-2, 9));
  }
  throw std::logic_error("unknown protocol");
}

}  // namespace msd
