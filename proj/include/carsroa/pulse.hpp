#pragma once
// Gaussian laser pulse in the frequency domain, plus the local oscillator
// used for heterodyne detection.
#include "carsroa/linalg.hpp"

namespace carsroa {

// Propagates along +z; polarization is a unit Jones vector orthogonal to z.
struct PulseSpec {
  double omega_0 = 0.0;   // central angular frequency
  double sigma = 0.0;     // Gaussian spectral width
  cplx amplitude{1.0};    // complex peak field
  double tau = 0.0;       // delay time
  Vec3c polarization{cplx(1.0), cplx(0.0), cplx(0.0)};

  double k_magnitude(double c) const { return omega_0 / c; }
};

struct LocalOscillator {
  double amplitude = 0.0;  // |E_LO|
  double phase = 0.0;      // phi
  double frequency = 0.0;  // omega_as
};

// Spectral amplitude at offset x from the carrier:
//   E(x) = amplitude * exp(-x^2 / (2 sigma^2)) * exp(i x tau).
// Complex offsets are accepted (analytic continuation, used by the
// pole-shifted coherence integrals).
cplx spectral_envelope(const PulseSpec& pulse, cplx x);

// E(omega) = envelope(omega - omega_0): the frequency-domain field.
inline cplx pulse_spectrum(const PulseSpec& pulse, double omega) {
  return spectral_envelope(pulse, omega - pulse.omega_0);
}

// Time-domain field E(t) = A sigma exp(-sigma^2 (t-tau)^2 / 2) e^{-i w0 t},
// the inverse transform of pulse_spectrum under F(t) = (2pi)^{-1/2} int dw
// F(w) e^{-iwt}.
cplx pulse_time_domain(const PulseSpec& pulse, double t);

}  // namespace carsroa
