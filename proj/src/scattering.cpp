#include "carsroa/scattering.hpp"

#include <cmath>

namespace carsroa {

namespace {
constexpr cplx I{0.0, 1.0};
}

TensorSet from_real_properties(const RealPropertySet& props) {
  TensorSet t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      t.alpha[i][j] = props.alpha[i][j];
      t.G[i][j] = -I * props.g_prime[i][j];       // G = -i G'
      t.G_script[i][j] = I * props.g_prime[j][i];  // script-G_{ba} = (G_{ab})^*
      for (int k = 0; k < 3; ++k) {
        t.A[i][j][k] = props.a_tensor[i][j][k];
        t.A_script[i][j][k] = props.a_tensor[i][j][k];
      }
    }
  return t;
}

InducedMoments induced_moments(const TensorSet& tensors, const PulseSpec& probe,
                               cplx F, double c) {
  const Vec3c& e = probe.polarization;
  const Vec3r z_hat{0.0, 0.0, 1.0};
  Vec3c b = cross(z_hat, e);  // B = (z x E)/c
  for (auto& x : b) x /= c;
  const double k_z = probe.k_magnitude(c);  // wavevector along z only

  InducedMoments mom;
  for (int bi = 0; bi < 3; ++bi)
    for (int a = 0; a < 3; ++a) {
      mom.mu_e[bi] += tensors.alpha[bi][a] * e[a] * F;
      mom.mu_m[bi] += tensors.G[bi][a] * b[a] * F;
      mom.m_vec[bi] += tensors.G_script[bi][a] * e[a] * F;
      mom.mu_q[bi] += I * k_z / 3.0 * tensors.A[bi][2][a] * e[a] * F;
    }
  for (int g = 0; g < 3; ++g)
    for (int bi = 0; bi < 3; ++bi)
      for (int a = 0; a < 3; ++a)
        mom.q_mat[g][bi] += tensors.A_script[a][g][bi] * e[a] * F;
  return mom;
}

Vec3c radiated_field(const InducedMoments& moments, const RadiationConfig& cfg) {
  const Vec3r& n = cfg.n_hat;
  const double k = cfg.k_as;
  const cplx phase = cfg.Z0 * std::exp(I * k * cfg.r) / (4.0 * M_PI * cfg.r);

  Vec3c mu{};
  for (int i = 0; i < 3; ++i)
    mu[i] = moments.mu_e[i] + moments.mu_m[i] + moments.mu_q[i];

  // (n x mu) x n
  const Vec3c e_mu = cross(cross(n, mu), n);
  // m x n
  const Vec3c e_m = cross(moments.m_vec, n);
  // ((q.n) x n) x n with (q)_a = q_{ab} n_b
  Vec3c qn{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) qn[a] += moments.q_mat[a][b] * n[b];
  const Vec3c e_q = cross(cross(qn, n), n);

  Vec3c out{};
  for (int i = 0; i < 3; ++i)
    out[i] = phase * (cfg.c * k * k * e_mu[i] + k * k * e_m[i] +
                      I * cfg.c * k * k * k / 3.0 * e_q[i]);
  return out;
}

CircularComponents antistokes_circular_components(const RealPropertySet& p,
                                                  cplx F, double N, double k_l,
                                                  double k_as, double c) {
  const auto& al = p.alpha;
  const auto& gp = p.g_prime;
  const auto& A = p.a_tensor;
  const cplx achiral = al[0][0] + I * (k_l - k_as) / 3.0 * A[0][2][0];
  const cplx chiral = (gp[1][1] + gp[0][0]) / c - k_l / 3.0 * A[1][2][0] +
                      k_as / 3.0 * A[0][1][2];
  const double pref = N / std::sqrt(2.0);
  CircularComponents out;
  out.E_R = pref * (achiral + I * al[1][0] + chiral) * F;
  out.E_L = pref * (achiral - I * al[1][0] - chiral) * F;
  return out;
}

LinearComponents antistokes_linear_components_circular_input(
    const RealPropertySet& p, cplx F, double N, double k_l, double k_as,
    double c, Handedness handedness) {
  const double s = (handedness == Handedness::R) ? +1.0 : -1.0;
  const auto& al = p.alpha;
  const auto& gp = p.g_prime;
  const auto& A = p.a_tensor;
  const double pref = N / std::sqrt(2.0);
  LinearComponents out;
  out.E_x = pref *
            (al[0][0] - s * I * al[0][1] +
             I * (k_l - k_as) / 3.0 * A[0][2][0] + s * gp[0][0] / c +
             s * k_l / 3.0 * A[0][2][1] + s * gp[1][1] / c -
             s * k_as / 3.0 * A[1][0][2]) *
            F;
  out.E_y = pref *
            (al[1][0] - s * I * al[1][1] + s * k_l / 3.0 * A[1][2][1] -
             s * k_as / 3.0 * A[1][1][2] - I * gp[1][1] / c +
             I * k_l / 3.0 * A[1][2][0] - I * gp[0][0] / c -
             I * k_as / 3.0 * A[0][1][2]) *
            F;
  return out;
}

}  // namespace carsroa
