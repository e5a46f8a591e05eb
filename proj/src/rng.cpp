#include "msd/rng.hpp"

#include <cmath>
#include <numbers>

namespace msd {

real CounterRng::gaussian(std::uint64_t counter) const {
  real u1 = uniform01(2 * counter);
  const real u2 = uniform01(2 * counter + 1);
  if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi_v<real> * u2);
}

}  // namespace msd
