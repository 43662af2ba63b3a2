#pragma once
// Observable spectra: difference/sum channels, circular intensity
// difference, heterodyne phase cycling, and the coherence enhancement.
#include <optional>
#include <string>
#include <vector>

#include "carsroa/averaging.hpp"
#include "carsroa/model.hpp"

namespace carsroa {

enum class DetectionMode { LinCir, CirLin };

struct SignalSpectrum {
  std::vector<double> omega_as_grid;
  std::vector<double> i_r, i_l, diff, sum;  // per grid point
  // channel coefficients per point: i_{r/l} = (achiral +- chiral) N^2 |F|^2
  // plus LO cross terms; kept so the LO-free CID can cancel the common
  // positive factor exactly instead of dividing two rounded products.
  std::vector<double> achiral_coef, chiral_coef;
  std::string config_hash;
  std::uint64_t seed = 0;
  double N = 0.0;
  bool has_lo = false;
};

struct HeterodyneResult {
  std::vector<double> omega_as_grid;
  std::vector<double> diff_cycled, sum_cycled;
  std::vector<double> ratio;  // 2G'/(c a); NaN where the sum channel vanishes
  double phi = 0.0;
};

// Channels from the analytic orientation averages on a precomputed F grid.
SignalSpectrum difference_and_sum(DetectionMode mode, const Invariants& inv,
                                  double N, const std::vector<double>& omega_as_grid,
                                  const std::vector<cplx>& F_grid,
                                  const std::optional<LocalOscillator>& lo,
                                  double omega_l, double c = 1.0);

// Measures the Lin-Cir channels at LO phases phi and phi + pi and subtracts;
// the N^2 homodyne terms cancel identically and only the heterodyne
// G'- and a-proportional terms survive.
HeterodyneResult phase_cycle(const Invariants& inv, double N,
                             const std::vector<double>& omega_as_grid,
                             const std::vector<cplx>& F_grid,
                             double lo_magnitude, double phi, double omega_l,
                             double c = 1.0);

// Delta = (I_R - I_L)/(I_R + I_L) per grid point; points where |sum| falls
// below floor_rel * max|sum| are NaN.
std::vector<double> cid(const SignalSpectrum& spectrum,
                        double floor_rel = 1e-12);

// N |rho21|^2 / rho11, the coherent-vs-spontaneous signal ratio.
double enhancement_ratio(double N, const CoherenceState& coherent);

}  // namespace carsroa
