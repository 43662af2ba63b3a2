#pragma once
// Molecular level scheme: vibrational gap, dephasing, and the transition
// moments of the excited manifold that feed the response tensors.
#include <string>
#include <vector>

#include "carsroa/linalg.hpp"

namespace carsroa {

struct ExcitedState {
  double omega_31 = 0.0;  // |1> -> |3> transition frequency
  double gamma_3 = 0.0;   // decay constant of |3>
  Vec3c mu_13{}, mu_32{};  // <1|mu|3>, <3|mu|2>
  Vec3c m_13{}, m_32{};    // magnetic dipole elements
  Mat3c q_13{}, q_32{};    // quadrupole elements (symmetric)

  // omega_32 is derived, never stored
  double omega_32(double omega_v) const { return omega_31 - omega_v; }
};

struct MolecularModel {
  double omega_v = 0.0;  // vibrational gap omega_21
  double gamma = 0.0;    // vibrational dephasing 1/T2
  std::vector<ExcitedState> excited_states;
  double hbar = 1.0;
  double c = 1.0;
};

struct CoherenceState {
  cplx rho21_0{};
  double rho11 = 0.0;
  double rho22 = 0.0;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the model invariants; with real_wavefunctions also enforces real
// mu/q and imaginary m. Report-style: callers treat failures as fatal.
ValidationReport validate_model(const MolecularModel& model,
                                bool real_wavefunctions = false);

ValidationReport validate_coherence(const CoherenceState& coh);

}  // namespace carsroa
