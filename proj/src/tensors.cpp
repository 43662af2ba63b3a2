#include "carsroa/tensors.hpp"

#include <cmath>

namespace carsroa {

namespace {

// Common two-denominator sum-over-states pattern: numerators are outer
// products of per-state left/right elements picked by the caller.
struct Denoms {
  cplx d_res;   // w32 - w_l - i*Gamma3
  cplx d_anti;  // w31 + w_l + i*Gamma3
};

Denoms denoms(const ExcitedState& s, double omega_v, double omega_l) {
  const cplx ig(0.0, s.gamma_3);
  return {s.omega_32(omega_v) - omega_l - ig, s.omega_31 + omega_l + ig};
}

}  // namespace

Mat3c build_alpha(const MolecularModel& model, double omega_l) {
  Mat3c out{};
  for (const auto& s : model.excited_states) {
    const auto [d1, d2] = denoms(s, model.omega_v, omega_l);
    for (int b = 0; b < 3; ++b)
      for (int a = 0; a < 3; ++a)
        out[b][a] += (s.mu_13[b] * s.mu_32[a] / d1 +
                      s.mu_13[a] * s.mu_32[b] / d2) / model.hbar;
  }
  return out;
}

OpticalActivityTensors build_optical_activity(const MolecularModel& model,
                                              double omega_l) {
  OpticalActivityTensors t{};
  for (const auto& s : model.excited_states) {
    const auto [d1, d2] = denoms(s, model.omega_v, omega_l);
    const double h = model.hbar;
    for (int b = 0; b < 3; ++b)
      for (int a = 0; a < 3; ++a) {
        t.G[b][a] += (s.mu_13[b] * s.m_32[a] / d1 +
                      s.m_13[a] * s.mu_32[b] / d2) / h;
        t.G_script[b][a] += (s.m_13[b] * s.mu_32[a] / d1 +
                             s.mu_13[a] * s.m_32[b] / d2) / h;
      }
    for (int b = 0; b < 3; ++b)
      for (int g = 0; g < 3; ++g)
        for (int a = 0; a < 3; ++a) {
          // A~_{b,ga}
          t.A[b][g][a] += (s.mu_13[b] * s.q_32[g][a] / d1 +
                           s.q_13[g][a] * s.mu_32[b] / d2) / h;
          // script-A~_{a,gb}: here stored with the same (first, pair) layout
          t.A_script[b][g][a] += (s.q_13[g][a] * s.mu_32[b] / d1 +
                                  s.mu_13[b] * s.q_32[g][a] / d2) / h;
        }
  }
  return t;
}

RealPropertySet reduce_to_real(const Mat3c& alpha_c, const Mat3c& G_c,
                               const Rank3c& A_c, double rel_tol) {
  RealPropertySet out;

  double res = 0.0, mag = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out.alpha[i][j] = alpha_c[i][j].real();
      res = std::max(res, std::abs(alpha_c[i][j].imag()));
      mag = std::max(mag, std::abs(alpha_c[i][j]));
      // g' = Re(i G); residue is the real part of G
      const cplx iG = cplx(0.0, 1.0) * G_c[i][j];
      out.g_prime[i][j] = iG.real();
    }
  if (mag > 0 && res > rel_tol * mag)
    throw ResidueTooLarge("imaginary residue of alpha exceeds tolerance");

  res = 0.0;
  mag = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const cplx iG = cplx(0.0, 1.0) * G_c[i][j];
      res = std::max(res, std::abs(iG.imag()));
      mag = std::max(mag, std::abs(G_c[i][j]));
    }
  if (mag > 0 && res > rel_tol * mag)
    throw ResidueTooLarge("real residue of G exceeds tolerance");

  res = 0.0;
  mag = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        out.a_tensor[i][j][k] = A_c[i][j][k].real();
        res = std::max(res, std::abs(A_c[i][j][k].imag()));
        mag = std::max(mag, std::abs(A_c[i][j][k]));
      }
  if (mag > 0 && res > rel_tol * mag)
    throw ResidueTooLarge("imaginary residue of A exceeds tolerance");

  return out;
}

Invariants compute_invariants(const RealPropertySet& p, double omega_l) {
  Invariants inv;
  const double tr_a = trace(p.alpha);
  const double tr_g = trace(p.g_prime);
  inv.a_iso = tr_a / 3.0;
  inv.g_iso = tr_g / 3.0;
  inv.a2 = tr_a * tr_a / 9.0;
  inv.aG_prime = tr_a * tr_g / 9.0;

  double aa = 0.0, ag = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      aa += p.alpha[i][j] * p.alpha[i][j];
      ag += p.alpha[i][j] * p.g_prime[i][j];
    }
  inv.gamma2_alpha = 0.5 * (3.0 * aa - tr_a * tr_a);
  inv.gamma2_G = 0.5 * (3.0 * ag - tr_a * tr_g);

  // gamma^2(A) = (w_l/2) eps_{l2 l3 l4} alpha_{l1 l2} A_{l3, l4 l1}
  double s = 0.0;
  for (int l1 = 0; l1 < 3; ++l1)
    for (int l2 = 0; l2 < 3; ++l2)
      for (int l3 = 0; l3 < 3; ++l3)
        for (int l4 = 0; l4 < 3; ++l4) {
          const double e = levi_civita(l2, l3, l4);
          if (e != 0.0) s += e * p.alpha[l1][l2] * p.a_tensor[l3][l4][l1];
        }
  inv.gamma2_A = 0.5 * omega_l * s;
  return inv;
}

}  // namespace carsroa
