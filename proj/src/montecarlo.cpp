#include "msd/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msd/bloch.hpp"
#include "msd/circuit4.hpp"
#include "msd/maps.hpp"
#include "msd/parallel.hpp"
#include "msd/rng.hpp"

namespace msd {

namespace {

real clip01(real x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

real h4_round_unequal(const std::array<real, 4>& polarizations) {
  const MagicAxis h = canonical_h_axis();
  const OutcomeTable t = h4_circuit({state_on_axis(h, polarizations[0]), state_on_axis(h, polarizations[1]),
                                     state_on_axis(h, polarizations[2]), state_on_axis(h, polarizations[3])});
  return t.success_polarization();
}

std::vector<RobustnessPoint> robustness_surface(const std::vector<real>& centers,
                                                const std::vector<real>& deviations, int samples,
                                                std::uint64_t seed, int workers) {
  if (centers.empty() || deviations.empty()) throw std::invalid_argument("robustness_surface: empty grid");
  if (samples < 1) throw std::invalid_argument("robustness_surface: need at least one sample");
  for (real c : centers)
    if (c < 0.0 || c > 1.0) throw std::invalid_argument("robustness_surface: centers must lie in [0, 1]");
  for (real d : deviations)
    if (d < 0.0 || d > 0.5) throw std::invalid_argument("robustness_surface: deviations must lie in [0, 0.5]");

  const long long cells = static_cast<long long>(centers.size()) * deviations.size();
  std::vector<RobustnessPoint> out(cells);
  parallel_for(cells, workers, [&](long long cell) {
    const real center = centers[cell / deviations.size()];
    const real delta = deviations[cell % deviations.size()];
    const CounterRng rng{seed, static_cast<std::uint64_t>(cell)};
    std::vector<real> gains(samples);
    for (int j = 0; j < samples; ++j) {
      std::array<real, 4> p;
      real mean_in = 0.0;
      for (int k = 0; k < 4; ++k) {
        p[k] = delta == 0.0 ? center
                            : clip01(rng.uniform(4ull * j + k, center - delta, center + delta));
        mean_in += 0.25 * p[k];
      }
      gains[j] = h4_round_unequal(p) - mean_in;
    }
    real sum = 0.0;
    for (real g : gains) sum += g;
    const real mean = sum / samples;
    real ss = 0.0;
    for (real g : gains) ss += (g - mean) * (g - mean);
    out[cell] = {center, delta, samples, mean, samples > 1 ? std::sqrt(ss / (samples - 1)) : 0.0};
  });
  return out;
}

DistributionReport gaussian_propagation(real mean, real sigma, int samples, std::uint64_t seed, int bins,
                                        int workers) {
  if (sigma <= 0.0) throw std::invalid_argument("gaussian_propagation: sigma must be positive");
  if (samples < 1 || bins < 1) throw std::invalid_argument("gaussian_propagation: bad sample/bin count");

  std::vector<real> outputs(samples);
  const CounterRng rng{seed, 0};
  parallel_for(samples, workers, [&](long long j) {
    std::array<real, 4> p;
    for (int k = 0; k < 4; ++k) p[k] = clip01(mean + sigma * rng.gaussian(4 * j + k));
    outputs[j] = h4_round_unequal(p);
  });

  DistributionReport report;
  report.input_mean = mean;
  report.input_sigma = sigma;
  report.samples = samples;
  real sum = 0.0;
  for (real v : outputs) sum += v;
  report.output_mean = sum / samples;
  real ss = 0.0;
  for (real v : outputs) ss += (v - report.output_mean) * (v - report.output_mean);
  report.output_sigma = samples > 1 ? std::sqrt(ss / (samples - 1)) : 0.0;

  report.bin_lo = 0.0;
  report.bin_width = 1.0 / bins;
  report.histogram.assign(bins, 0.0);
  for (real v : outputs) {
    int b = std::min(static_cast<int>(v / report.bin_width), bins - 1);
    report.histogram[b] += 1.0 / samples;
  }
  return report;
}

std::vector<ExperimentRow> experiment_replication() {
  static const std::array<real, 5> inputs = {0.661, 0.826, 0.857, 0.885, 0.999};
  static const std::array<real, 5> measured = {0.640, 0.838, 0.867, 0.894, 0.979};
  std::vector<ExperimentRow> rows;
  rows.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const StepResult r = h4_map(inputs[i]);
    rows.push_back({inputs[i], r.p_out, r.theta, measured[i],
                    std::abs(r.p_out - measured[i]) / r.p_out});
  }
  return rows;
}

}  // namespace msd
