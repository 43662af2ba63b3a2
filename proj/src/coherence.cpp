#include "carsroa/coherence.hpp"

#include <cmath>

namespace carsroa {

namespace {

// (<2|mu.eps_s|3>)(<3|mu.eps_p|1>) via Hermiticity of mu.
cplx coupling(const ExcitedState& s, const Vec3c& pol_s, const Vec3c& pol_p) {
  cplx mu23_s = 0.0, mu31_p = 0.0;
  for (int i = 0; i < 3; ++i) {
    mu23_s += std::conj(s.mu_32[i]) * pol_s[i];
    mu31_p += std::conj(s.mu_13[i]) * pol_p[i];
  }
  return mu23_s * mu31_p;
}

// S_3(Omega) = int dw_p E_s(Omega - w_p) E_p(w_p) / (w_p - w31 + i Gamma3)
cplx spectral_overlap(const PulseSpec& pump, const PulseSpec& stokes,
                      const ExcitedState& st, cplx Omega,
                      const QuadOptions& opt) {
  auto integrand = [&](double wp) {
    const cplx es = spectral_envelope(stokes, Omega - wp + stokes.omega_0);
    const cplx ep = spectral_envelope(pump, cplx(wp - pump.omega_0));
    return es * ep / (wp - st.omega_31 + cplx(0.0, st.gamma_3));
  };
  std::vector<std::pair<double, double>> domain;
  domain.emplace_back(pump.omega_0 - 8 * pump.sigma, pump.omega_0 + 8 * pump.sigma);
  const double stokes_center = Omega.real() + stokes.omega_0;
  domain.emplace_back(stokes_center - 8 * stokes.sigma,
                      stokes_center + 8 * stokes.sigma);
  const double span = 10 * (pump.sigma + stokes.sigma);
  if (std::abs(st.omega_31 - pump.omega_0) < span)
    domain.emplace_back(st.omega_31 - 50 * st.gamma_3,
                        st.omega_31 + 50 * st.gamma_3);
  return integrate_union(integrand, domain, opt);
}

}  // namespace

cplx stokes_anti_resonant_time(const PulseSpec& stokes, double t) {
  const double u = t - stokes.tau;
  return stokes.amplitude * stokes.sigma *
         std::exp(-0.5 * stokes.sigma * stokes.sigma * u * u) *
         std::exp(cplx(0.0, stokes.omega_0 * t));
}

PreparedCoherence prepare_coherence(const PulseSpec& pump,
                                    const PulseSpec& stokes,
                                    const MolecularModel& model,
                                    const QuadOptions& opt) {
  const double h2 = model.hbar * model.hbar;
  const cplx Omega(model.omega_v, -model.gamma);
  cplx rho = 0.0;
  for (const auto& st : model.excited_states) {
    const cplx c3 = coupling(st, stokes.polarization, pump.polarization);
    rho += cplx(0.0, -1.0) / h2 * c3 * spectral_overlap(pump, stokes, st, Omega, opt);
  }
  PreparedCoherence out;
  out.rho21_0 = rho;
  out.perturbative_bound_exceeded = std::abs(rho) > 0.5;
  return out;
}

cplx prepare_coherence_resonant(const PulseSpec& pump, const PulseSpec& stokes,
                                const MolecularModel& model,
                                const QuadOptions& opt) {
  const double h2 = model.hbar * model.hbar;
  cplx rho = 0.0;
  for (const auto& st : model.excited_states) {
    const cplx c3 = coupling(st, stokes.polarization, pump.polarization);
    // Eq-8 form: +i/(2 hbar^2) with denominator (w31 - w_p - i Gamma3)
    rho += cplx(0.0, -0.5) / h2 * c3 *
           spectral_overlap(pump, stokes, st, cplx(model.omega_v), opt);
  }
  return rho;
}

cplx coherence_dynamics_time(const PulseSpec& pump, const PulseSpec& stokes,
                             const MolecularModel& model, double t,
                             const QuadOptions& opt) {
  const double h2 = model.hbar * model.hbar;
  QuadOptions inner_opt = opt;
  inner_opt.rel_tol = 0.1 * opt.rel_tol;

  cplx rho = 0.0;
  for (const auto& st : model.excited_states) {
    const cplx c3 = coupling(st, stokes.polarization, pump.polarization);

    // t2 support: Stokes envelope at t - t2, clipped to t2 >= 0
    const double s_lo = t - stokes.tau - 8.0 / stokes.sigma;
    const double s_hi = t - stokes.tau + 8.0 / stokes.sigma;
    if (s_hi <= 0.0) continue;
    const double a2 = std::max(0.0, s_lo), b2 = s_hi;

    auto outer = [&](double t2) -> cplx {
      const double u = t - t2;
      // t1 support: pump envelope at u - t1, clipped to t1 >= 0
      const double p_lo = u - pump.tau - 8.0 / pump.sigma;
      const double p_hi = u - pump.tau + 8.0 / pump.sigma;
      if (p_hi <= 0.0) return 0.0;
      const double a1 = std::max(0.0, p_lo), b1 = p_hi;
      auto inner = [&](double t1) {
        return std::exp(cplx(-st.gamma_3 * t1, -st.omega_31 * t1)) *
               pulse_time_domain(pump, u - t1);
      };
      const cplx g = integrate(inner, a1, b1, inner_opt);
      return std::exp(cplx(-model.gamma * t2, -model.omega_v * t2)) *
             stokes_anti_resonant_time(stokes, u) * g;
    };
    rho += -c3 / h2 * integrate(outer, a2, b2, opt);
  }
  return rho;
}

cplx coherence_dynamics_freq(const PulseSpec& pump, const PulseSpec& stokes,
                             const MolecularModel& model, double t,
                             const QuadOptions& opt) {
  const double h2 = model.hbar * model.hbar;
  QuadOptions inner_opt = opt;
  inner_opt.rel_tol = 0.1 * opt.rel_tol;
  const double two_photon = pump.omega_0 - stokes.omega_0;
  const double width = std::hypot(pump.sigma, stokes.sigma);

  cplx rho = 0.0;
  for (const auto& st : model.excited_states) {
    const cplx c3 = coupling(st, stokes.polarization, pump.polarization);

    auto outer = [&](double Om) -> cplx {
      auto inner = [&](double wp) {
        const cplx es = spectral_envelope(stokes, cplx(Om - wp + stokes.omega_0));
        const cplx ep = spectral_envelope(pump, cplx(wp - pump.omega_0));
        return es * ep / (wp - st.omega_31 + cplx(0.0, st.gamma_3));
      };
      std::vector<std::pair<double, double>> dom;
      dom.emplace_back(pump.omega_0 - 8 * pump.sigma,
                       pump.omega_0 + 8 * pump.sigma);
      dom.emplace_back(Om + stokes.omega_0 - 8 * stokes.sigma,
                       Om + stokes.omega_0 + 8 * stokes.sigma);
      const cplx s = integrate_union(inner, dom, inner_opt);
      return std::exp(cplx(0.0, -Om * t)) * s /
             (Om - model.omega_v + cplx(0.0, model.gamma));
    };

    std::vector<std::pair<double, double>> dom;
    dom.emplace_back(two_photon - 8 * width, two_photon + 8 * width);
    dom.emplace_back(model.omega_v - 50 * model.gamma,
                     model.omega_v + 50 * model.gamma);
    rho += c3 / (2.0 * M_PI * h2) * integrate_union(outer, dom, opt);
  }
  return rho;
}

cplx lineshape_F(double omega_as, double tau, const PulseSpec& probe,
                 double gamma, cplx rho21_0, double omega_v,
                 const QuadOptions& opt) {
  PulseSpec p = probe;
  p.tau = tau;
  const double center = omega_as - omega_v;
  auto integrand = [&](double wl) {
    const double d = center - wl;
    return spectral_envelope(p, cplx(wl - p.omega_0)) * gamma /
           (gamma * gamma + d * d);
  };
  std::vector<std::pair<double, double>> dom;
  dom.emplace_back(p.omega_0 - 8 * p.sigma, p.omega_0 + 8 * p.sigma);
  dom.emplace_back(center - 50 * gamma, center + 50 * gamma);
  const cplx base = integrate_union(integrand, dom, opt) / M_PI;
  return rho21_0 * base;
}

}  // namespace carsroa
