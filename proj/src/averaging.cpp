#include "carsroa/averaging.hpp"

#include <cmath>

namespace carsroa {

Mat3r Orientation::rotation_matrix() const {
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  return Mat3r{{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

Mat3r rotation_about_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return Mat3r{{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

RealPropertySet rotate_tensors(const RealPropertySet& p, const Mat3r& R) {
  RealPropertySet out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double sa = 0.0, sg = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          sa += R[i][a] * R[j][b] * p.alpha[a][b];
          sg += R[i][a] * R[j][b] * p.g_prime[a][b];
        }
      out.alpha[i][j] = sa;
      out.g_prime[i][j] = sg;
    }

  // rank 3 by successive single-index contractions
  Rank3r t1{}, t2{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int c = 0; c < 3; ++c) s += p.a_tensor[a][b][c] * R[k][c];
        t1[a][b][k] = s;
      }
  for (int a = 0; a < 3; ++a)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int b = 0; b < 3; ++b) s += t1[a][b][k] * R[j][b];
        t2[a][j][k] = s;
      }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int a = 0; a < 3; ++a) s += t2[a][j][k] * R[i][a];
        out.a_tensor[i][j][k] = s;
      }
  return out;
}

namespace {

// Box-Muller; keeps the stream reproducible independent of the standard
// library's normal_distribution implementation.
struct GaussianPair {
  double a, b;
};
GaussianPair gauss2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double u = 0.0;
  do {
    u = uni(rng);
  } while (u <= 0.0);
  const double v = uni(rng);
  const double r = std::sqrt(-2.0 * std::log(u));
  return {r * std::cos(2.0 * M_PI * v), r * std::sin(2.0 * M_PI * v)};
}

}  // namespace

Orientation sample_orientation(std::mt19937_64& rng) {
  const auto g1 = gauss2(rng);
  const auto g2 = gauss2(rng);
  Orientation o;
  o.q = {g1.a, g1.b, g2.a, g2.b};
  const double n =
      std::sqrt(o.q[0] * o.q[0] + o.q[1] * o.q[1] + o.q[2] * o.q[2] + o.q[3] * o.q[3]);
  for (auto& x : o.q) x /= n;
  return o;
}

McEstimate mc_average_intensity(
    const std::function<double(const Orientation&)>& signal_fn,
    std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double mean = 0.0, m2 = 0.0;  // Welford
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = signal_fn(sample_orientation(rng));
    const double d = x - mean;
    mean += d / static_cast<double>(i + 1);
    m2 += d * (x - mean);
  }
  McEstimate est;
  est.mean = mean;
  est.n_samples = n;
  est.seed = seed;
  est.std_error =
      n > 1 ? std::sqrt(m2 / (static_cast<double>(n) * static_cast<double>(n - 1)))
            : 0.0;
  return est;
}

namespace {

double lo_cross_term(cplx F, const std::optional<LocalOscillator>& lo) {
  if (!lo) return 0.0;
  // Re(F E_LO^*) with E_LO = |E_LO| e^{-i phi}  =>  Re(F |E_LO| e^{i phi})
  return (F * lo->amplitude * std::exp(cplx(0.0, lo->phase))).real();
}

}  // namespace

ChannelCoefficients lin_cir_coefficients(const Invariants& inv,
                                         double omega_ratio, double c) {
  ChannelCoefficients k;
  k.achiral = (45.0 * inv.a2 + 7.0 * inv.gamma2_alpha) / 90.0;
  k.chiral = (180.0 * inv.aG_prime + 4.0 * inv.gamma2_G) / (90.0 * c) -
             6.0 * inv.gamma2_A / (90.0 * c) +
             omega_ratio * 2.0 * inv.gamma2_A / (90.0 * c);
  return k;
}

ChannelCoefficients cir_lin_coefficients(const Invariants& inv,
                                         double omega_ratio, double c) {
  ChannelCoefficients k;
  k.achiral = (45.0 * inv.a2 + 7.0 * inv.gamma2_alpha) / 90.0;
  k.chiral = (180.0 * inv.aG_prime + 4.0 * inv.gamma2_G) / (90.0 * c) -
             omega_ratio * 6.0 * inv.gamma2_A / (90.0 * c) +
             2.0 * inv.gamma2_A / (90.0 * c);
  return k;
}

namespace {

ChannelPair assemble_channels(const ChannelCoefficients& k, const Invariants& inv,
                              double N, cplx F,
                              const std::optional<LocalOscillator>& lo, double c) {
  const double base = (N * N) * std::norm(F);
  const double het = lo_cross_term(F, lo) * N;
  const double het_a = std::sqrt(2.0) * inv.a_iso * het;
  const double het_g = 4.0 / (std::sqrt(2.0) * c) * inv.g_iso * het;
  return {k.achiral * base + k.chiral * base + het_a + het_g,
          k.achiral * base - k.chiral * base + het_a - het_g};
}

}  // namespace

ChannelPair analytic_lin_cir(const Invariants& inv, double N, cplx F,
                             const std::optional<LocalOscillator>& lo,
                             double omega_ratio, double c) {
  return assemble_channels(lin_cir_coefficients(inv, omega_ratio, c), inv, N, F,
                           lo, c);
}

ChannelPair analytic_cir_lin(const Invariants& inv, double N, cplx F,
                             const std::optional<LocalOscillator>& lo,
                             double omega_ratio, double c) {
  return assemble_channels(cir_lin_coefficients(inv, omega_ratio, c), inv, N, F,
                           lo, c);
}

}  // namespace carsroa
