#include "msd/map_table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "msd/rng.hpp"

namespace msd {

namespace {

constexpr const char* format_tag = "msd-map-table";
constexpr int format_version = 1;

// Monotonicity-preserving tangents (harmonic-mean Fritsch-Carlson variant).
std::vector<real> pchip_tangents(const std::vector<real>& x, const std::vector<real>& y) {
  const std::size_t n = x.size();
  std::vector<real> d(n - 1), m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  m[0] = d[0];
  m[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0)
      m[i] = 0.0;
    else
      m[i] = 2.0 * d[i - 1] * d[i] / (d[i - 1] + d[i]);
  }
  return m;
}

}  // namespace

MapTable MapTable::build(std::string key, int grid, const std::function<std::pair<real, real>(real)>& eval) {
  if (grid < 2) throw std::invalid_argument("MapTable: grid must have at least 2 nodes");
  MapTable t;
  t.key_ = std::move(key);
  t.p_.resize(grid);
  t.pout_.resize(grid);
  t.theta_.resize(grid);
  for (int i = 0; i < grid; ++i) {
    t.p_[i] = static_cast<real>(i) / static_cast<real>(grid - 1);
    auto [po, th] = eval(t.p_[i]);
    t.pout_[i] = po;
    t.theta_[i] = th;
  }
  t.finalize();
  return t;
}

void MapTable::finalize() {
  for (std::size_t i = 1; i < p_.size(); ++i)
    if (p_[i] <= p_[i - 1]) throw std::invalid_argument("MapTable: nodes must be strictly increasing");
  dpout_ = pchip_tangents(p_, pout_);
  dtheta_ = pchip_tangents(p_, theta_);
}

real MapTable::interpolate(const std::vector<real>& y, const std::vector<real>& m, real x) const {
  const std::size_t n = p_.size();
  if (x <= p_.front()) return y.front() + m.front() * (x - p_.front());
  if (x >= p_.back()) return y.back() + m.back() * (x - p_.back());
  const real h = p_[1] - p_[0];
  std::size_t i = std::min(static_cast<std::size_t>((x - p_.front()) / h), n - 2);
  while (x < p_[i]) --i;
  while (x > p_[i + 1]) ++i;
  const real t = (x - p_[i]) / h;
  const real t2 = t * t, t3 = t2 * t;
  const real h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const real h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return h00 * y[i] + h10 * h * m[i] + h01 * y[i + 1] + h11 * h * m[i + 1];
}

real MapTable::p_out(real p_in) const { return interpolate(pout_, dpout_, p_in); }
real MapTable::theta(real p_in) const { return interpolate(theta_, dtheta_, p_in); }

std::filesystem::path MapTable::cache_file(const std::filesystem::path& cache_dir, const std::string& key,
                                           int grid) {
  return cache_dir / ("map_" + key + "_" + std::to_string(grid) + ".txt");
}

bool MapTable::save(const std::filesystem::path& cache_dir) const {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  const auto path = cache_file(cache_dir, key_, grid());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << format_tag << ' ' << format_version << '\n';
    out << "key " << key_ << '\n';
    out << "grid " << grid() << '\n';
    out << "# p_in p_out theta\n";
    char buf[96];
    for (int i = 0; i < grid(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p_[i], pout_[i], theta_[i]);
      out << buf;
    }
    if (!out) return false;
  }
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

bool MapTable::load(const std::filesystem::path& cache_dir, const std::string& key, int grid, MapTable& out) {
  std::ifstream in(cache_file(cache_dir, key, grid));
  if (!in) return false;
  std::string tag, field;
  int version = 0, stored_grid = 0;
  std::string stored_key;
  if (!(in >> tag >> version) || tag != format_tag || version != format_version) return false;
  if (!(in >> field >> stored_key) || field != "key" || stored_key != key) return false;
  if (!(in >> field >> stored_grid) || field != "grid" || stored_grid != grid) return false;
  std::string comment_line;
  std::getline(in, comment_line);
  std::getline(in, comment_line);
  MapTable t;
  t.key_ = key;
  t.p_.resize(grid);
  t.pout_.resize(grid);
  t.theta_.resize(grid);
  for (int i = 0; i < grid; ++i)
    if (!(in >> t.p_[i] >> t.pout_[i] >> t.theta_[i])) return false;
  try {
    t.finalize();
  } catch (const std::invalid_argument&) {
    return false;
  }
  out = std::move(t);
  return true;
}

MapTable MapTable::load_or_build(const std::string& key, int grid, const std::filesystem::path& cache_dir,
                                 const std::function<std::pair<real, real>(real)>& eval) {
  MapTable t;
  if (load(cache_dir, key, grid, t)) return t;
  t = build(key, grid, eval);
  t.save(cache_dir);  // best effort; an unwritable cache just means rebuilding next time
  return t;
}

real MapTable::spot_check(const std::function<std::pair<real, real>(real)>& eval, int count,
                          std::uint64_t seed) const {
  CounterRng rng{seed, 0};
  real worst = 0.0;
  for (int j = 0; j < count; ++j) {
    const real x = rng.uniform(static_cast<std::uint64_t>(j), 0.0, 1.0);
    const auto [po, th] = eval(x);
    worst = std::max(worst, std::abs(po - p_out(x)));
    worst = std::max(worst, std::abs(th - theta(x)));
  }
  return worst;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("MSD_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "msd";
  return std::filesystem::path(".msd-cache");
}

}  // namespace msd
