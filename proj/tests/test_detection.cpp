#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "carsroa/detection.hpp"
#include "fixtures.hpp"

using namespace carsroa;

namespace {

// synthetic lineshape values on a small grid; no quadrature needed here
struct GridData {
  std::vector<double> w;
  std::vector<cplx> F;
};

GridData synthetic_grid(cplx rho21 = cplx(0.01, 0.004)) {
  GridData g;
  const double w0 = 11.0, width = 0.1;
  for (int k = 0; k < 10; ++k) {
    const double w = 10.7 + 0.06 * k;
    g.w.push_back(w);
    const double d = (w - w0) / width;
    g.F.push_back(rho21 * std::exp(-0.5 * d * d) * std::exp(cplx(0.0, 0.3 * d)));
  }
  return g;
}

Invariants chiral_invariants(std::uint64_t seed = 55) {
  std::mt19937_64 rng(seed);
  const auto p = fixtures::random_property_set(rng, 1e-3);
  return compute_invariants(p, 10.0);
}

}  // namespace

TEST_CASE("achiral invariants give a vanishing difference channel") {
  std::mt19937_64 rng(9);
  const auto p = fixtures::random_property_set(rng, 0.0);
  const Invariants inv = compute_invariants(p, 10.0);
  const auto g = synthetic_grid();
  const auto s = difference_and_sum(DetectionMode::LinCir, inv, 3.0, g.w, g.F,
                                    std::nullopt, 10.0);
  for (double d : s.diff) CHECK(d == 0.0);
  for (double v : s.sum) CHECK(v > 0.0);
}

TEST_CASE("doubling N quadruples every LO-free channel exactly") {
  const Invariants inv = chiral_invariants();
  const auto g = synthetic_grid();
  for (DetectionMode mode : {DetectionMode::LinCir, DetectionMode::CirLin}) {
    const auto s1 =
        difference_and_sum(mode, inv, 3.0, g.w, g.F, std::nullopt, 10.0);
    const auto s2 =
        difference_and_sum(mode, inv, 6.0, g.w, g.F, std::nullopt, 10.0);
    for (std::size_t k = 0; k < g.w.size(); ++k) {
      CHECK(s2.i_r[k] == 4.0 * s1.i_r[k]);
      CHECK(s2.i_l[k] == 4.0 * s1.i_l[k]);
      CHECK(s2.diff[k] == 4.0 * s1.diff[k]);
      CHECK(s2.sum[k] == 4.0 * s1.sum[k]);
    }
  }
}

TEST_CASE("phase cycling removes the homodyne content") {
  const Invariants inv = chiral_invariants();
  const auto g = synthetic_grid();
  const double lo_mag = 0.05, phi = 0.4, N = 3.0;
  const auto h = phase_cycle(inv, N, g.w, g.F, lo_mag, phi, 10.0);

  for (std::size_t k = 0; k < g.w.size(); ++k) {
    // reference: pure heterodyne terms recomputed from the invariants
    auto x = [&](double p) {
      return (g.F[k] * lo_mag * std::exp(cplx(0.0, p))).real();
    };
    const double het_a = std::sqrt(2.0) * inv.a_iso * N;
    const double het_g = 4.0 / std::sqrt(2.0) * inv.g_iso * N;
    const double want_diff = 2.0 * het_g * (x(phi) - x(phi + M_PI));
    const double want_sum = 2.0 * het_a * (x(phi) - x(phi + M_PI));
    // residual N^2 content must be far below the homodyne scale
    const auto plain = difference_and_sum(DetectionMode::LinCir, inv, N, g.w,
                                          g.F, std::nullopt, 10.0);
    CHECK(std::abs(h.sum_cycled[k] - want_sum) <= 1e-12 * plain.sum[k]);
    CHECK(std::abs(h.diff_cycled[k] - want_diff) <= 1e-12 * plain.sum[k]);
  }
}

TEST_CASE("cycled ratio recovers 2 G' / (c a)") {
  const Invariants inv = chiral_invariants(77);
  const auto g = synthetic_grid();
  const auto h = phase_cycle(inv, 2.0, g.w, g.F, 0.1, 0.25, 10.0);
  const double want = 2.0 * inv.g_iso / inv.a_iso;
  for (double r : h.ratio) CHECK(r == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("phase cycling without an LO is rejected") {
  const Invariants inv = chiral_invariants();
  const auto g = synthetic_grid();
  CHECK_THROWS_AS(phase_cycle(inv, 1.0, g.w, g.F, 0.0, 0.0, 10.0),
                  std::invalid_argument);
}

TEST_CASE("CID equals diff/sum and is floored in the wings") {
  const Invariants inv = chiral_invariants();
  auto g = synthetic_grid();
  g.F.back() = cplx(1e-15, 0.0);  // push one point far below the floor
  const auto s = difference_and_sum(DetectionMode::LinCir, inv, 3.0, g.w, g.F,
                                    std::nullopt, 10.0);
  const auto delta = cid(s);
  for (std::size_t k = 0; k + 1 < delta.size(); ++k) {
    CHECK(delta[k] == doctest::Approx(s.diff[k] / s.sum[k]).epsilon(1e-12));
  }
  CHECK(std::isnan(delta.back()));
}

TEST_CASE("CID is bit-identical when the coherence is rescaled") {
  const Invariants inv = chiral_invariants();
  const auto g1 = synthetic_grid(cplx(0.01, 0.004));
  const auto g2 = synthetic_grid(cplx(0.1, 0.04));  // 10x rho21
  const auto d1 = cid(difference_and_sum(DetectionMode::LinCir, inv, 3.0, g1.w,
                                         g1.F, std::nullopt, 10.0));
  const auto d2 = cid(difference_and_sum(DetectionMode::LinCir, inv, 3.0, g2.w,
                                         g2.F, std::nullopt, 10.0));
  for (std::size_t k = 0; k < d1.size(); ++k) CHECK(d1[k] == d2[k]);
}

TEST_CASE("enhancement ratio arithmetic") {
  CoherenceState coh{cplx(0.5, 0.0), 1.0, 0.0};
  CHECK(enhancement_ratio(4e4, coh) == 1e4);

  CoherenceState weak{cplx(0.01, 0.0), 0.99, 0.01};
  CHECK(enhancement_ratio(1e6, weak) ==
        doctest::Approx(1e6 * 1e-4 / 0.99).epsilon(1e-14));

  CoherenceState bad{cplx(0.1, 0.0), 0.0, 0.0};
  CHECK_THROWS_AS(enhancement_ratio(10.0, bad), std::invalid_argument);
}
