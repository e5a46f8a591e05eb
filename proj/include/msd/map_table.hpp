#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "msd/types.hpp"

namespace msd {

/// Memoized one-round map p_in -> (p_out, theta) on a uniform grid over [0, 1],
/// evaluated between nodes with monotone (Fritsch-Carlson) cubic interpolation.
class MapTable {
 public:
  /// Build by sampling `eval` (returning {p_out, theta}) at `grid` uniform nodes.
  static MapTable build(std::string key, int grid, const std::function<std::pair<real, real>(real)>& eval);

  /// Textual cache round-trip.  Files carry a version header and are
  /// re-derivable from scratch; a stale or malformed file is ignored.
  static MapTable load_or_build(const std::string& key, int grid, const std::filesystem::path& cache_dir,
                                const std::function<std::pair<real, real>(real)>& eval);
  bool save(const std::filesystem::path& cache_dir) const;
  static bool load(const std::filesystem::path& cache_dir, const std::string& key, int grid, MapTable& out);

  real p_out(real p_in) const;
  real theta(real p_in) const;

  const std::string& key() const { return key_; }
  int grid() const { return static_cast<int>(p_.size()); }
  const std::vector<real>& nodes() const { return p_; }
  const std::vector<real>& p_out_nodes() const { return pout_; }
  const std::vector<real>& theta_nodes() const { return theta_; }

  /// Largest |interpolated - freshly simulated| p_out error over `count`
  /// uniformly drawn off-grid points (seeded, reproducible).
  real spot_check(const std::function<std::pair<real, real>(real)>& eval, int count, std::uint64_t seed) const;

  static std::filesystem::path cache_file(const std::filesystem::path& cache_dir, const std::string& key, int grid);

 private:
  real interpolate(const std::vector<real>& y, const std::vector<real>& m, real x) const;
  void finalize();

  std::string key_;
  std::vector<real> p_, pout_, theta_;
  std::vector<real> dpout_, dtheta_;  // interpolation tangents
};

/// MSD_CACHE_DIR, else $HOME/.cache/msd.
std::filesystem::path default_cache_dir();

}  // namespace msd
