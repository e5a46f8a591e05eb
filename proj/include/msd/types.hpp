#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace msd {

using real = double;
using complex = std::complex<real>;

using vec3 = Eigen::Vector3d;
using mat3 = Eigen::Matrix3d;
using cmat = Eigen::MatrixXcd;
using cmat2 = Eigen::Matrix2cd;

inline constexpr real sqrt2 = std::numbers::sqrt2_v<real>;
inline constexpr real sqrt3 = std::numbers::sqrt3_v<real>;

/// Polarization loss of the T-projection applied to a state on an H axis.
inline const real dt_loss_factor = std::sqrt(2.0 / 3.0);

}  // namespace msd
