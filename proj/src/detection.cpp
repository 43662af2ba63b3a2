#include "carsroa/detection.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace carsroa {

SignalSpectrum difference_and_sum(DetectionMode mode, const Invariants& inv,
                                  double N,
                                  const std::vector<double>& omega_as_grid,
                                  const std::vector<cplx>& F_grid,
                                  const std::optional<LocalOscillator>& lo,
                                  double omega_l, double c) {
  if (omega_as_grid.size() != F_grid.size())
    throw std::invalid_argument("grid and F sizes differ");
  SignalSpectrum s;
  s.omega_as_grid = omega_as_grid;
  s.N = N;
  s.has_lo = lo.has_value();
  const std::size_t n = omega_as_grid.size();
  s.i_r.reserve(n);
  s.i_l.reserve(n);
  s.diff.reserve(n);
  s.sum.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ratio = omega_as_grid[k] / omega_l;
    const ChannelCoefficients coef = mode == DetectionMode::LinCir
                                         ? lin_cir_coefficients(inv, ratio, c)
                                         : cir_lin_coefficients(inv, ratio, c);
    const ChannelPair p =
        mode == DetectionMode::LinCir
            ? analytic_lin_cir(inv, N, F_grid[k], lo, ratio, c)
            : analytic_cir_lin(inv, N, F_grid[k], lo, ratio, c);
    s.achiral_coef.push_back(coef.achiral);
    s.chiral_coef.push_back(coef.chiral);
    s.i_r.push_back(p.first);
    s.i_l.push_back(p.second);
    s.diff.push_back(p.first - p.second);
    s.sum.push_back(p.first + p.second);
  }
  return s;
}

HeterodyneResult phase_cycle(const Invariants& inv, double N,
                             const std::vector<double>& omega_as_grid,
                             const std::vector<cplx>& F_grid,
                             double lo_magnitude, double phi, double omega_l,
                             double c) {
  if (!(lo_magnitude > 0))
    throw std::invalid_argument("phase_cycle requires a local oscillator");
  LocalOscillator lo_a{lo_magnitude, phi, 0.0};
  LocalOscillator lo_b{lo_magnitude, phi + M_PI, 0.0};
  const SignalSpectrum at_phi = difference_and_sum(
      DetectionMode::LinCir, inv, N, omega_as_grid, F_grid, lo_a, omega_l, c);
  const SignalSpectrum shifted = difference_and_sum(
      DetectionMode::LinCir, inv, N, omega_as_grid, F_grid, lo_b, omega_l, c);

  HeterodyneResult out;
  out.omega_as_grid = omega_as_grid;
  out.phi = phi;
  const std::size_t n = omega_as_grid.size();
  out.diff_cycled.resize(n);
  out.sum_cycled.resize(n);
  out.ratio.resize(n);
  double sum_max = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    out.diff_cycled[k] = at_phi.diff[k] - shifted.diff[k];
    out.sum_cycled[k] = at_phi.sum[k] - shifted.sum[k];
    sum_max = std::max(sum_max, std::abs(out.sum_cycled[k]));
  }
  const double floor = 1e-12 * sum_max;
  for (std::size_t k = 0; k < n; ++k)
    out.ratio[k] = std::abs(out.sum_cycled[k]) > floor
                       ? out.diff_cycled[k] / out.sum_cycled[k]
                       : std::numeric_limits<double>::quiet_NaN();
  return out;
}

std::vector<double> cid(const SignalSpectrum& spectrum, double floor_rel) {
  double sum_max = 0.0;
  for (double s : spectrum.sum) sum_max = std::max(sum_max, std::abs(s));
  const double floor = floor_rel * sum_max;
  std::vector<double> delta(spectrum.sum.size());
  const bool coef_path =
      !spectrum.has_lo && spectrum.achiral_coef.size() == delta.size();
  for (std::size_t k = 0; k < delta.size(); ++k) {
    if (!(std::abs(spectrum.sum[k]) > floor)) {
      delta[k] = std::numeric_limits<double>::quiet_NaN();
    } else if (coef_path) {
      // without an LO both channels share the factor N^2 |F|^2; cancel it
      // algebraically so the ratio is independent of the coherence magnitude
      delta[k] = spectrum.chiral_coef[k] / spectrum.achiral_coef[k];
    } else {
      delta[k] = spectrum.diff[k] / spectrum.sum[k];
    }
  }
  return delta;
}

double enhancement_ratio(double N, const CoherenceState& coherent) {
  if (!(coherent.rho11 > 0))
    throw std::invalid_argument("enhancement_ratio requires rho11 > 0");
  return N * std::norm(coherent.rho21_0) / coherent.rho11;
}

}  // namespace carsroa
