#pragma once
// Preparation and dynamics of the vibrational coherence rho21 driven by
// pump/Stokes pulse pairs, and the anti-Stokes lineshape integral F.
#include "carsroa/model.hpp"
#include "carsroa/pulse.hpp"
#include "carsroa/quadrature.hpp"

namespace carsroa {

// Long-time rephased coherence lim_{t->inf} rho21(t) e^{(i w_v + Gamma) t},
// computed from the frequency-domain dynamics by closing the two-photon
// resonance pole exactly (full residue; the delta-function reduction that
// keeps only half of it is recovered by prepare_coherence_resonant below).
// Warns via the returned flag when |rho21| exceeds the physical bound 1/2.
struct PreparedCoherence {
  cplx rho21_0{};
  bool perturbative_bound_exceeded = false;
};
PreparedCoherence prepare_coherence(const PulseSpec& pump,
                                    const PulseSpec& stokes,
                                    const MolecularModel& model,
                                    const QuadOptions& opt = {});

// The on-resonance delta-function reduction (half-residue bookkeeping);
// used as an oracle limit, not in the main pipeline.
cplx prepare_coherence_resonant(const PulseSpec& pump, const PulseSpec& stokes,
                                const MolecularModel& model,
                                const QuadOptions& opt = {});

// rho21(t) by direct nested time-domain quadrature with Heaviside factors.
cplx coherence_dynamics_time(const PulseSpec& pump, const PulseSpec& stokes,
                             const MolecularModel& model, double t,
                             const QuadOptions& opt = {});

// rho21(t) by the double frequency integral; the two-photon pole carries
// the prescription 1/(Omega - w21 + i Gamma).
cplx coherence_dynamics_freq(const PulseSpec& pump, const PulseSpec& stokes,
                             const MolecularModel& model, double t,
                             const QuadOptions& opt = {});

// F(w_as, tau) = (1/pi) int dw_l E(w_l - w0) e^{i(w_l-w0)tau}
//                Gamma rho21(0) / (Gamma^2 + (w_as - w_v - w_l)^2).
// rho21_0 multiplies the converged integral as an exact scalar factor.
cplx lineshape_F(double omega_as, double tau, const PulseSpec& probe,
                 double gamma, cplx rho21_0, double omega_v,
                 const QuadOptions& opt = {});

// The anti-resonant Stokes component e^{+i w_s t} entering the coherence
// integrals; its spectrum is spectral_envelope(stokes, w + w_s0).
cplx stokes_anti_resonant_time(const PulseSpec& stokes, double t);

}  // namespace carsroa
