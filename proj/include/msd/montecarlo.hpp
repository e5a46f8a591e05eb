#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "msd/types.hpp"

namespace msd {

/// Average one-round gain of the 4-copy circuit when the four input
/// polarizations are drawn uniformly from [center - delta, center + delta]
/// (clipped to [0, 1]).  The gain of each sample is measured against the
/// arithmetic mean of its four drawn polarizations.
struct RobustnessPoint {
  real center;
  real delta;
  int samples;
  real mean_gain;
  real std_gain;
};

/// Output-polarization statistics for Gaussian-distributed input copies.
struct DistributionReport {
  real input_mean;
  real input_sigma;
  int samples;
  real output_mean;
  real output_sigma;
  real bin_lo;
  real bin_width;
  std::vector<real> histogram;  // masses, summing to 1
};

/// One theory-vs-measurement row of the five-input single-round study.
struct ExperimentRow {
  real p_in;
  real theory_p_out;
  real theory_theta0;
  real measured_p_out;
  real relative_deviation;  // |theory - measured| / theory
};

/// Sample j of grid cell i draws from the counter stream (seed, i); results
/// are bit-identical for any worker count.
std::vector<RobustnessPoint> robustness_surface(const std::vector<real>& centers,
                                                const std::vector<real>& deviations, int samples,
                                                std::uint64_t seed, int workers = 0);

DistributionReport gaussian_propagation(real mean, real sigma, int samples, std::uint64_t seed,
                                        int bins = 60, int workers = 0);

/// The five noisy inputs of the single-round study paired with the measured
/// output polarizations they produced.
std::vector<ExperimentRow> experiment_replication();

/// One generalized 4-copy round on H-axis inputs: branch-0 output p_H.
real h4_round_unequal(const std::array<real, 4>& polarizations);

}  // namespace msd
