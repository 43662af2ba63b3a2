#pragma once
// Sum-over-states response tensors, their real reductions, and the five
// isotropic invariants that determine orientationally averaged intensities.
#include <stdexcept>

#include "carsroa/linalg.hpp"
#include "carsroa/model.hpp"

namespace carsroa {

struct ResidueTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The four optical activity tensors evaluated at one frequency.
struct OpticalActivityTensors {
  Mat3c G;        // electric dipole -- magnetic dipole, G tilde
  Mat3c G_script; // its partner, script-G tilde
  Rank3c A;        // electric dipole -- electric quadrupole, A tilde (beta, gamma alpha)
  Rank3c A_script; // partner, script-A tilde (alpha, gamma beta)
};

struct RealPropertySet {
  Mat3r alpha{};     // real polarizability
  Mat3r g_prime{};   // G' = i G
  Rank3r a_tensor{}; // real quadrupole activity tensor A
};

struct Invariants {
  double a2 = 0.0;            // a^2
  double gamma2_alpha = 0.0;  // gamma^2(alpha)
  double aG_prime = 0.0;      // a G'
  double gamma2_G = 0.0;      // gamma^2(G')
  double gamma2_A = 0.0;      // gamma^2(A)
  // Signed isotropic traces; needed by the heterodyne cross terms, where the
  // sign of a and G' survives (a2 alone loses it).
  double a_iso = 0.0;  // (1/3) tr alpha
  double g_iso = 0.0;  // (1/3) tr G'
};

// alpha~_{ba} = (1/hbar) sum_3 [ mu13_b mu32_a / (w32 - w - iG3)
//                              + mu13_a mu32_b / (w31 + w + iG3) ]
Mat3c build_alpha(const MolecularModel& model, double omega_l);

OpticalActivityTensors build_optical_activity(const MolecularModel& model,
                                              double omega_l);

// Discards the imaginary residues of the real-wavefunction reduction;
// throws ResidueTooLarge if they exceed rel_tol of the tensor magnitude.
RealPropertySet reduce_to_real(const Mat3c& alpha_c, const Mat3c& G_c,
                               const Rank3c& A_c, double rel_tol = 1e-10);

Invariants compute_invariants(const RealPropertySet& props, double omega_l);

}  // namespace carsroa
