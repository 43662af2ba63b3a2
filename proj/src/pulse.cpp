#include "carsroa/pulse.hpp"

#include <cmath>

namespace carsroa {

cplx spectral_envelope(const PulseSpec& pulse, cplx x) {
  const double s2 = 2.0 * pulse.sigma * pulse.sigma;
  return pulse.amplitude * std::exp(-x * x / s2) *
         std::exp(cplx(0.0, 1.0) * x * pulse.tau);
}

cplx pulse_time_domain(const PulseSpec& pulse, double t) {
  const double u = t - pulse.tau;
  return pulse.amplitude * pulse.sigma *
         std::exp(-0.5 * pulse.sigma * pulse.sigma * u * u) *
         std::exp(cplx(0.0, -pulse.omega_0 * t));
}

}  // namespace carsroa
