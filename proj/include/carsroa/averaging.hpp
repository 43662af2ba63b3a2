#pragma once
// Isotropic orientational averaging: analytic invariant formulas and the
// Monte Carlo oracle over uniformly random molecular orientations.
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "carsroa/pulse.hpp"
#include "carsroa/tensors.hpp"

namespace carsroa {

// Unit quaternion (w, x, y, z).
struct Orientation {
  std::array<double, 4> q{1.0, 0.0, 0.0, 0.0};
  Mat3r rotation_matrix() const;
};

Mat3r rotation_about_z(double angle);

// alpha'_{ij} = R_ia R_jb alpha_ab, A'_{i,jk} = R_ia R_jb R_kc A_{a,bc}
RealPropertySet rotate_tensors(const RealPropertySet& props, const Mat3r& R);
inline RealPropertySet rotate_tensors(const RealPropertySet& props,
                                      const Orientation& o) {
  return rotate_tensors(props, o.rotation_matrix());
}

// Uniform on SO(3): normalized 4-component Gaussian quaternion. The
// Gaussians come from an internal Box-Muller transform so the stream is
// fully determined by the engine state.
Orientation sample_orientation(std::mt19937_64& rng);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

McEstimate mc_average_intensity(
    const std::function<double(const Orientation&)>& signal_fn,
    std::uint64_t n, std::uint64_t seed);

struct ChannelPair {
  double first = 0.0;   // I_R (Lin-Cir) or I_x^R (Cir-Lin)
  double second = 0.0;  // I_L or I_x^L
};

// Per-base-intensity coefficients of the averaged channels: the two LO-free
// channels are (achiral +- chiral) * N^2 |F|^2. Exposed so ratios like the
// CID can be formed with the common positive factor cancelled exactly.
struct ChannelCoefficients {
  double achiral = 0.0;
  double chiral = 0.0;
};
ChannelCoefficients lin_cir_coefficients(const Invariants& inv,
                                         double omega_ratio, double c = 1.0);
ChannelCoefficients cir_lin_coefficients(const Invariants& inv,
                                         double omega_ratio, double c = 1.0);

// Orientation-averaged Lin-Cir intensities from the invariants. The LO
// cross terms use the isotropic scalars a = tr(alpha)/3, G' = tr(G')/3; the
// complex LO value is |E_LO| e^{-i phi} so that the heterodyne terms read
// Re(F |E_LO| e^{i phi}).
ChannelPair analytic_lin_cir(const Invariants& inv, double N, cplx F,
                             const std::optional<LocalOscillator>& lo,
                             double omega_ratio, double c = 1.0);

ChannelPair analytic_cir_lin(const Invariants& inv, double N, cplx F,
                             const std::optional<LocalOscillator>& lo,
                             double omega_ratio, double c = 1.0);

}  // namespace carsroa
