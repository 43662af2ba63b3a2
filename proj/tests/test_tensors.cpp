#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "carsroa/averaging.hpp"
#include "carsroa/tensors.hpp"
#include "fixtures.hpp"

using namespace carsroa;

namespace {

// Independent term-by-term oracle: expands the sum-over-states expressions
// with explicit loops and no shared denominator plumbing.
Mat3c naive_alpha(const MolecularModel& m, double wl) {
  Mat3c out{};
  for (const auto& s : m.excited_states)
    for (int b = 0; b < 3; ++b)
      for (int a = 0; a < 3; ++a) {
        const cplx d1 = cplx(s.omega_31 - m.omega_v - wl, -s.gamma_3);
        const cplx d2 = cplx(s.omega_31 + wl, s.gamma_3);
        out[b][a] += s.mu_13[b] * s.mu_32[a] / (m.hbar * d1) +
                     s.mu_13[a] * s.mu_32[b] / (m.hbar * d2);
      }
  return out;
}

MolecularModel random_complex_model(std::uint64_t seed, int n_states) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto rc = [&] { return cplx(uni(rng), uni(rng)); };
  MolecularModel m;
  m.omega_v = 1.0;
  m.gamma = 0.05;
  for (int k = 0; k < n_states; ++k) {
    ExcitedState s;
    s.omega_31 = 20.0 + 7.0 * k;
    s.gamma_3 = 0.3;
    for (int i = 0; i < 3; ++i) {
      s.mu_13[i] = rc();
      s.mu_32[i] = rc();
      s.m_13[i] = rc();
      s.m_32[i] = rc();
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        s.q_13[i][j] = rc();
        s.q_13[j][i] = s.q_13[i][j];
        s.q_32[i][j] = rc();
        s.q_32[j][i] = s.q_32[i][j];
      }
    m.excited_states.push_back(s);
  }
  return m;
}

}  // namespace

TEST_CASE("all mu_13 zero gives a vanishing polarizability") {
  MolecularModel m = fixtures::chiral_model();
  for (auto& s : m.excited_states) s.mu_13 = Vec3c{};
  const Mat3c a = build_alpha(m, 10.0);
  CHECK(max_abs(a) == 0.0);
}

TEST_CASE("single state, x-oriented moments: direct substitution") {
  MolecularModel m;
  m.omega_v = 1.0;
  m.gamma = 0.05;
  ExcitedState s;
  s.omega_31 = 30.0;
  s.gamma_3 = 1e-10;
  s.mu_13[0] = 1.0;
  s.mu_32[0] = 1.0;
  m.excited_states.push_back(s);

  const double wl = 10.0;
  const double delta = (s.omega_31 - m.omega_v) - wl;  // w32 - wl
  const Mat3c a = build_alpha(m, wl);
  CHECK(a[0][0].real() ==
        doctest::Approx(1.0 / delta + 1.0 / (s.omega_31 + wl)).epsilon(1e-9));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != 0 || j != 0) CHECK(std::abs(a[i][j]) == 0.0);
}

TEST_CASE("random complex moments match the naive double-loop oracle") {
  const auto m = random_complex_model(91, 3);
  const double wl = 9.0;
  const Mat3c a = build_alpha(m, wl);
  const Mat3c ref = naive_alpha(m, wl);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(a[i][j] - ref[i][j]) <= 1e-13 * max_abs(ref));

  // same oracle pattern for the optical activity tensors
  const auto t = build_optical_activity(m, wl);
  Mat3c Gref{}, Gsref{};
  Rank3c Aref{}, Asref{};
  for (const auto& s : m.excited_states) {
    const cplx d1 = cplx(s.omega_31 - m.omega_v - wl, -s.gamma_3);
    const cplx d2 = cplx(s.omega_31 + wl, s.gamma_3);
    for (int b = 0; b < 3; ++b)
      for (int a2 = 0; a2 < 3; ++a2) {
        Gref[b][a2] += s.mu_13[b] * s.m_32[a2] / d1 + s.m_13[a2] * s.mu_32[b] / d2;
        Gsref[b][a2] += s.m_13[b] * s.mu_32[a2] / d1 + s.mu_13[a2] * s.m_32[b] / d2;
        for (int g = 0; g < 3; ++g) {
          Aref[b][g][a2] +=
              s.mu_13[b] * s.q_32[g][a2] / d1 + s.q_13[g][a2] * s.mu_32[b] / d2;
          Asref[b][g][a2] +=
              s.q_13[g][a2] * s.mu_32[b] / d1 + s.mu_13[b] * s.q_32[g][a2] / d2;
        }
      }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(t.G[i][j] - Gref[i][j]) <= 1e-13 * max_abs(Gref));
      CHECK(std::abs(t.G_script[i][j] - Gsref[i][j]) <= 1e-13 * max_abs(Gsref));
      for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(t.A[i][j][k] - Aref[i][j][k]) <= 1e-13);
        CHECK(std::abs(t.A_script[i][j][k] - Asref[i][j][k]) <= 1e-13);
      }
    }
}

TEST_CASE("zero magnetic moments kill G and script-G") {
  MolecularModel m = fixtures::chiral_model();
  for (auto& s : m.excited_states) {
    s.m_13 = Vec3c{};
    s.m_32 = Vec3c{};
  }
  const auto t = build_optical_activity(m, 10.0);
  CHECK(max_abs(t.G) == 0.0);
  CHECK(max_abs(t.G_script) == 0.0);
}

TEST_CASE("real-wavefunction identities on the structured fixture") {
  const auto m = fixtures::chiral_model(1e-3, 1e-14);
  const auto t = build_optical_activity(m, 10.0);
  double scale_g = 0.0, scale_a = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      scale_g = std::max(scale_g, std::abs(t.G[i][j]));
      for (int k = 0; k < 3; ++k) scale_a = std::max(scale_a, std::abs(t.A[i][j][k]));
    }
  REQUIRE(scale_g > 0.0);
  for (int b = 0; b < 3; ++b)
    for (int a = 0; a < 3; ++a) {
      // (G)_{ba} = (script-G)*_{ab}
      CHECK(std::abs(t.G[b][a] - std::conj(t.G_script[a][b])) <= 1e-12 * scale_g);
      for (int g = 0; g < 3; ++g)
        CHECK(std::abs(t.A[b][g][a] - t.A_script[b][g][a]) <= 1e-12 * scale_a);
    }
}

TEST_CASE("reduce_to_real on achiral and chiral models") {
  const double wl = 10.0;
  {
    const auto m = fixtures::achiral_model();
    const auto t = build_optical_activity(m, wl);
    const auto p = reduce_to_real(build_alpha(m, wl), t.G, t.A);
    CHECK(frobenius_norm(p.g_prime) == 0.0);
    double amax = 0.0;
    for (auto& r : p.a_tensor)
      for (auto& q : r)
        for (double v : q) amax = std::max(amax, std::abs(v));
    CHECK(amax == 0.0);
  }
  {
    const auto m = fixtures::chiral_model();
    const auto t = build_optical_activity(m, wl);
    const auto p = reduce_to_real(build_alpha(m, wl), t.G, t.A);
    CHECK(frobenius_norm(p.g_prime) > 0.0);  // i*(imaginary G) is real
  }
}

TEST_CASE("complex transition dipoles trip the residue guard") {
  MolecularModel m = fixtures::chiral_model();
  m.excited_states[0].mu_13[1] += cplx(0.0, 0.4);
  const auto t = build_optical_activity(m, 10.0);
  CHECK_THROWS_AS(reduce_to_real(build_alpha(m, 10.0), t.G, t.A),
                  ResidueTooLarge);
}

TEST_CASE("invariants: hand values on a diagonal set") {
  RealPropertySet p;
  p.alpha = Mat3r{{{1.0, 0, 0}, {0, 2.0, 0}, {0, 0, 3.0}}};
  p.g_prime = Mat3r{{{0.5, 0, 0}, {0, 0.5, 0}, {0, 0, 0.5}}};
  const auto inv = compute_invariants(p, 10.0);
  CHECK(inv.a2 == doctest::Approx(4.0));              // (6/3)^2
  CHECK(inv.a_iso == doctest::Approx(2.0));
  CHECK(inv.gamma2_alpha == doctest::Approx(3.0));    // (3*14 - 36)/2
  CHECK(inv.aG_prime == doctest::Approx(1.0));        // 6*1.5/9
  CHECK(inv.g_iso == doctest::Approx(0.5));
  CHECK(inv.gamma2_G == doctest::Approx(0.0));        // (3*3 - 9)/2
  CHECK(inv.gamma2_A == 0.0);
}

TEST_CASE("invariants are rotation invariant") {
  std::mt19937_64 rng(7);
  const auto p = fixtures::random_property_set(rng, 0.5);
  const auto inv0 = compute_invariants(p, 10.0);
  for (int k = 0; k < 5; ++k) {
    const Orientation o = sample_orientation(rng);
    const auto inv = compute_invariants(rotate_tensors(p, o), 10.0);
    CHECK(inv.a2 == doctest::Approx(inv0.a2).epsilon(1e-10));
    CHECK(inv.gamma2_alpha == doctest::Approx(inv0.gamma2_alpha).epsilon(1e-10));
    CHECK(inv.aG_prime == doctest::Approx(inv0.aG_prime).epsilon(1e-10));
    CHECK(inv.gamma2_G == doctest::Approx(inv0.gamma2_G).epsilon(1e-10));
    CHECK(inv.gamma2_A == doctest::Approx(inv0.gamma2_A).epsilon(1e-10));
  }
}
