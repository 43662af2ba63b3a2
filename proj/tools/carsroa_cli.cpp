// carsroa command-line front end: spectrum, heterodyne, verify, enhancement.
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "carsroa/workbench.hpp"

namespace {

carsroa::RunConfig load(const std::string& config_path, std::uint64_t seed,
                        bool seed_set, std::uint64_t samples, bool samples_set,
                        bool no_timestamp) {
  carsroa::RunConfig cfg = carsroa::parse_config(config_path);
  if (seed_set) {
    if (!cfg.mc) cfg.mc = carsroa::McSettings{};
    cfg.mc->seed = seed;
  }
  if (samples_set) {
    if (!cfg.mc) cfg.mc = carsroa::McSettings{};
    cfg.mc->n_samples = samples;
  }
  if (no_timestamp) cfg.output.timestamp = false;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence-enhanced chiral Raman scattering workbench"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::uint64_t seed = 0, samples = 0;
  bool no_timestamp = false;

  auto add_common = [&](CLI::App* sub, bool needs_out) {
    sub->add_option("--config", config_path, "configuration file (JSON)")
        ->required();
    if (needs_out) sub->add_option("--out", out_path, "output CSV path");
    sub->add_option("--seed", seed, "override the configured RNG seed");
    sub->add_option("--samples", samples, "override mc.n_samples");
    sub->add_flag("--no-timestamp", no_timestamp,
                  "omit the timestamp comment from output files");
  };

  CLI::App* sp = app.add_subcommand("spectrum", "difference/sum spectrum CSV");
  add_common(sp, true);
  CLI::App* het = app.add_subcommand("heterodyne", "phase-cycled heterodyne CSV");
  add_common(het, true);
  CLI::App* ver = app.add_subcommand("verify", "run the oracle suite");
  add_common(ver, false);
  CLI::App* enh =
      app.add_subcommand("enhancement", "print the coherent enhancement ratio");
  add_common(enh, false);

  CLI11_PARSE(app, argc, argv);

  try {
    const carsroa::RunConfig cfg =
        load(config_path, seed, sp->count("--seed") || het->count("--seed") ||
                                    ver->count("--seed") || enh->count("--seed"),
             samples,
             sp->count("--samples") || het->count("--samples") ||
                 ver->count("--samples") || enh->count("--samples"),
             no_timestamp);
    const std::string out = out_path.empty() ? cfg.output.path : out_path;

    if (sp->parsed()) {
      const auto run = carsroa::run_spectrum(cfg, out);
      std::cout << "wrote " << out << " (" << run.spectrum.omega_as_grid.size()
                << " rows, config " << run.spectrum.config_hash << ")\n";
      return 0;
    }
    if (het->parsed()) {
      const auto run = carsroa::run_heterodyne(cfg, out);
      std::cout << "wrote " << out << " (" << run.result.omega_as_grid.size()
                << " rows, phi=" << run.result.phi << ")\n";
      return 0;
    }
    if (ver->parsed()) {
      const auto report = carsroa::run_verify(cfg);
      for (const auto& c : report.checks)
        std::printf("%-40s %s  value=%.6e  tol=%.6e  %s\n", c.name.c_str(),
                    c.passed ? "PASS" : "FAIL", c.value, c.tolerance,
                    c.detail.c_str());
      if (!report.all_passed()) {
        std::cerr << "verification failed\n";
        return 2;
      }
      std::cout << "all checks passed\n";
      return 0;
    }
    if (enh->parsed()) {
      if (!cfg.coherence) {
        std::cerr << "enhancement requires a coherence block (populations)\n";
        return 1;
      }
      carsroa::CoherenceState coh = *cfg.coherence;
      if (cfg.prepare_from_pulses)
        coh.rho21_0 =
            carsroa::prepare_coherence(*cfg.pump, *cfg.stokes, cfg.model)
                .rho21_0;
      const double r = carsroa::enhancement_ratio(cfg.n_molecules, coh);
      std::printf("enhancement_ratio = %.12e  (N=%.6e, |rho21|=%.6e, "
                  "rho11=%.6e)\n",
                  r, cfg.n_molecules, std::abs(coh.rho21_0), coh.rho11);
      return 0;
    }
  } catch (const carsroa::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const carsroa::ConfigValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const carsroa::QuadratureNotConverged& e) {
    std::cerr << "error: quadrature did not converge: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
