#pragma once
// Induced multipole moments for a fixed molecular orientation and the
// anti-Stokes field they radiate in the forward direction.
#include "carsroa/pulse.hpp"
#include "carsroa/tensors.hpp"

namespace carsroa {

// The five response tensors at one frequency, in whatever frame the caller
// works in. from_real_properties encodes the real-wavefunction relations
// G = -i G', script-G_{ba} = i G'_{ab}, A = script-A.
struct TensorSet {
  Mat3c alpha{};
  Mat3c G{};
  Mat3c G_script{};
  Rank3c A{};
  Rank3c A_script{};
};

TensorSet from_real_properties(const RealPropertySet& props);

struct InducedMoments {
  Vec3c mu_e{}, mu_m{}, mu_q{};  // induced electric dipoles by perturbation
  Vec3c m_vec{};                 // induced magnetic dipole
  Mat3c q_mat{};                 // induced quadrupole
};

struct RadiationConfig {
  Vec3r n_hat{0.0, 0.0, 1.0};  // emission direction
  double r = 1.0;              // observation distance
  double Z0 = 1.0;             // impedance
  double k_as = 0.0;           // emitted wavenumber omega_as / c
  double k_l = 0.0;            // incident wavenumber
  double c = 1.0;              // speed of light (unit-system constant)
};

// Moments induced by the probe scattering off the prepared coherence, with
// the tensors frozen at the frequency they were built at. The probe B field
// follows the plane-wave relation B = (z x E)/c; the quadrupole-induced
// dipole carries the prefactor i k_z/3 with k along z.
// F is the lineshape factor common to every component (lineshape_F).
InducedMoments induced_moments(const TensorSet& tensors, const PulseSpec& probe,
                               cplx F, double c);

// Radiation-zone field of the moment set:
//   E = Z0 (c k^2/4pi) (e^{ikr}/r) (n x mu) x n
//     + Z0 (k^2/4pi)  (e^{ikr}/r) (m x n)
//     + Z0 (i c k^3/12pi) (e^{ikr}/r) ((q.n) x n) x n,  mu = mu_e+mu_m+mu_q.
Vec3c radiated_field(const InducedMoments& moments, const RadiationConfig& cfg);

// Forward-scattered circular components for an x-polarized probe (the
// bracketed alpha/G'/A combination with the +(-) sign for R(L)):
//   E_{R/L} = (N/sqrt2)[ a_xx +- i a_yx + (i k_l/3) A_{x,zx}
//             - (i k_as/3) A_{x,zx} +- G'_yy/c -+ (k_l/3) A_{y,zx}
//             +- G'_xx/c +- (k_as/3) A_{x,yz} ] F
struct CircularComponents {
  cplx E_R{}, E_L{};
};
CircularComponents antistokes_circular_components(const RealPropertySet& props,
                                                  cplx F, double N, double k_l,
                                                  double k_as, double c);

// Forward-scattered x and y components for an R or L circular probe.
struct LinearComponents {
  cplx E_x{}, E_y{};
};
enum class Handedness { R, L };
LinearComponents antistokes_linear_components_circular_input(
    const RealPropertySet& props, cplx F, double N, double k_l, double k_as,
    double c, Handedness handedness);

}  // namespace carsroa
