#include "carsroa/model.hpp"

#include <cmath>
#include <sstream>

namespace carsroa {

namespace {

double q_asymmetry(const Mat3c& q) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      num = std::max(num, std::abs(q[i][j] - q[j][i]));
      den = std::max(den, std::abs(q[i][j]));
    }
  return den > 0 ? num / den : 0.0;
}

double max_im(const Vec3c& v) {
  double s = 0;
  for (auto& x : v) s = std::max(s, std::abs(x.imag()));
  return s;
}
double max_re(const Vec3c& v) {
  double s = 0;
  for (auto& x : v) s = std::max(s, std::abs(x.real()));
  return s;
}
double max_im(const Mat3c& m) {
  double s = 0;
  for (auto& r : m)
    for (auto& x : r) s = std::max(s, std::abs(x.imag()));
  return s;
}

}  // namespace

ValidationReport validate_model(const MolecularModel& model,
                                bool real_wavefunctions) {
  ValidationReport rep;
  auto fail = [&](const std::string& msg) { rep.violations.push_back(msg); };

  if (!(model.omega_v > 0)) fail("omega_v must be positive");
  if (!(model.gamma > 0)) fail("gamma must be positive");
  if (!(model.hbar > 0)) fail("hbar must be positive");
  if (!(model.c > 0)) fail("c must be positive");
  if (model.excited_states.empty()) fail("excited_states must be non-empty");

  const double qtol = 1e-12;
  for (std::size_t k = 0; k < model.excited_states.size(); ++k) {
    const auto& s = model.excited_states[k];
    std::ostringstream at;
    at << "excited_states[" << k << "]: ";
    if (!(s.omega_31 > model.omega_v))
      fail(at.str() + "omega_31 must exceed omega_v");
    if (!(s.gamma_3 > 0)) fail(at.str() + "gamma_3 must be positive");
    if (q_asymmetry(s.q_13) > qtol)
      fail(at.str() + "q_13 violates quadrupole symmetry");
    if (q_asymmetry(s.q_32) > qtol)
      fail(at.str() + "q_32 violates quadrupole symmetry");
    if (real_wavefunctions) {
      const double scale = 1e-12;
      if (max_im(s.mu_13) > scale || max_im(s.mu_32) > scale)
        fail(at.str() + "mu must be purely real under real_wavefunctions");
      if (max_re(s.m_13) > scale || max_re(s.m_32) > scale)
        fail(at.str() + "m must be purely imaginary under real_wavefunctions");
      if (max_im(s.q_13) > scale || max_im(s.q_32) > scale)
        fail(at.str() + "q must be purely real under real_wavefunctions");
    }
  }
  return rep;
}

ValidationReport validate_coherence(const CoherenceState& coh) {
  ValidationReport rep;
  auto fail = [&](const std::string& msg) { rep.violations.push_back(msg); };
  if (coh.rho11 < 0 || coh.rho22 < 0) fail("populations must be non-negative");
  if (coh.rho11 + coh.rho22 > 1.0 + 1e-12)
    fail("rho11 + rho22 must not exceed 1");
  const double bound = std::sqrt(coh.rho11 * coh.rho22);
  if (std::abs(coh.rho21_0) > bound + 1e-12)
    fail("|rho21_0| exceeds sqrt(rho11*rho22) positivity bound");
  if (std::abs(coh.rho21_0) > 0.5 + 1e-12)
    fail("|rho21_0| exceeds the maximum allowed coherence 1/2");
  return rep;
}

}  // namespace carsroa
