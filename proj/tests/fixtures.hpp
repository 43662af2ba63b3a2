#pragma once
// Shared toy models and random property sets used across the test suite.
#include <random>

#include "carsroa/averaging.hpp"
#include "carsroa/model.hpp"
#include "carsroa/tensors.hpp"

namespace fixtures {

using namespace carsroa;

// Two-state model with Born-Oppenheimer-structured moments: per state the
// 1->3 and 3->2 elements share one electronic vector scaled by vibrational
// overlap factors, with the magnetic 3->2 element carrying the opposite
// sign. This is the structure under which the real-wavefunction tensor
// identities hold. chiral_scale sets the m/q magnitudes relative to mu.
inline MolecularModel chiral_model(double chiral_scale = 1e-3,
                                   double gamma_3 = 1e-12) {
  MolecularModel m;
  m.omega_v = 1.0;
  m.gamma = 0.05;

  auto add_state = [&](double w31, double o1, double o2, Vec3r mu_e, Vec3r w,
                       Mat3r Q) {
    ExcitedState s;
    s.omega_31 = w31;
    s.gamma_3 = gamma_3;
    for (int i = 0; i < 3; ++i) {
      s.mu_13[i] = o1 * mu_e[i];
      s.mu_32[i] = o2 * mu_e[i];
      s.m_13[i] = o1 * cplx(0.0, chiral_scale * w[i]);
      s.m_32[i] = -o2 * cplx(0.0, chiral_scale * w[i]);
      for (int j = 0; j < 3; ++j) {
        s.q_13[i][j] = o1 * chiral_scale * Q[i][j];
        s.q_32[i][j] = o2 * chiral_scale * Q[i][j];
      }
    }
    m.excited_states.push_back(s);
  };

  add_state(30.0, 1.0, 0.6, {0.8, 0.3, -0.2}, {0.2, -0.5, 0.4},
            {{{0.3, 0.1, -0.2}, {0.1, -0.4, 0.25}, {-0.2, 0.25, 0.15}}});
  add_state(45.0, 0.7, 0.9, {-0.25, 0.7, 0.45}, {0.5, 0.2, -0.3},
            {{{-0.2, 0.3, 0.05}, {0.3, 0.1, -0.15}, {0.05, -0.15, 0.35}}});
  return m;
}

inline MolecularModel achiral_model() {
  MolecularModel m = chiral_model(0.0);
  return m;
}

inline PulseSpec probe_pulse() {
  PulseSpec p;
  p.omega_0 = 10.0;
  p.sigma = 0.2;
  return p;
}

inline PulseSpec pump_pulse() {
  PulseSpec p;
  p.omega_0 = 5.0;
  p.sigma = 0.4;
  return p;
}

inline PulseSpec stokes_pulse() {
  PulseSpec p;
  p.omega_0 = 4.0;
  p.sigma = 0.4;
  return p;
}

// Random property set compatible with the isotropic-average formulas:
// symmetric alpha, A symmetric in its quadrupole index pair, chiral parts
// scaled down by chiral_scale.
inline RealPropertySet random_property_set(std::mt19937_64& rng,
                                           double chiral_scale = 1e-3) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  RealPropertySet p;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      p.alpha[i][j] = uni(rng);
      p.alpha[j][i] = p.alpha[i][j];
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.g_prime[i][j] = chiral_scale * uni(rng);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = j; k < 3; ++k) {
        p.a_tensor[i][j][k] = chiral_scale * uni(rng);
        p.a_tensor[i][k][j] = p.a_tensor[i][j][k];
      }
  return p;
}

// Single MC pass accumulating both channels of signal_fn (returns {first,
// second}) with Welford statistics for each.
struct PairEstimate {
  McEstimate first, second;
};

template <typename Fn>
PairEstimate mc_average_pair(Fn&& fn, std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double m1 = 0.0, s1 = 0.0, m2 = 0.0, s2 = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Orientation o = sample_orientation(rng);
    const auto [x, y] = fn(o);
    const double d1 = x - m1;
    m1 += d1 / static_cast<double>(i + 1);
    s1 += d1 * (x - m1);
    const double d2 = y - m2;
    m2 += d2 / static_cast<double>(i + 1);
    s2 += d2 * (y - m2);
  }
  auto pack = [&](double mean, double m2sum) {
    McEstimate e;
    e.mean = mean;
    e.n_samples = n;
    e.seed = seed;
    e.std_error = n > 1 ? std::sqrt(m2sum / (double(n) * double(n - 1))) : 0.0;
    return e;
  };
  return {pack(m1, s1), pack(m2, s2)};
}

}  // namespace fixtures
