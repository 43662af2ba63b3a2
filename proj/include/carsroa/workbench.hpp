#pragma once
// Configuration ingestion, the pipeline runners behind the CLI subcommands,
// and CSV output.
#include <optional>
#include <string>

#include "carsroa/coherence.hpp"
#include "carsroa/detection.hpp"

namespace carsroa {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double start = 0.0, stop = 0.0;
  int points = 0;
};

struct McSettings {
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = 0;
};

struct OutputSpec {
  std::string path = "spectrum.csv";
  bool timestamp = true;
};

struct RunConfig {
  int schema_version = 1;
  MolecularModel model;
  bool real_wavefunctions = true;
  std::optional<CoherenceState> coherence;  // explicit rho21 and populations
  bool prepare_from_pulses = false;
  std::optional<PulseSpec> pump, stokes;
  PulseSpec probe;
  std::optional<LocalOscillator> lo;
  DetectionMode mode = DetectionMode::LinCir;
  bool heterodyne = false;  // phase-cycled run; Lin-Cir channels, LO required
  GridSpec grid;
  double n_molecules = 1.0;
  std::optional<McSettings> mc;
  OutputSpec output;
};

RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);
std::string serialize_config(const RunConfig& cfg);

// FNV-1a over the canonical serialized form.
std::string config_hash(const RunConfig& cfg);

struct SpectrumRun {
  SignalSpectrum spectrum;
  std::vector<double> delta;  // cid column
  cplx rho21;
  Invariants invariants;
};

// Build tensors at the probe central frequency, evaluate F on the grid, and
// produce the analytic channels; writes CSV when out_path is non-empty.
SpectrumRun run_spectrum(const RunConfig& cfg, const std::string& out_path = "");

struct HeterodyneRun {
  HeterodyneResult result;
  cplx rho21;
  Invariants invariants;
};
HeterodyneRun run_heterodyne(const RunConfig& cfg,
                             const std::string& out_path = "");

struct VerifyCheck {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured deviation (in units of the tolerance metric)
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Test hooks; flipping the sign corrupts the analytic Lin-Cir difference so
// the MC comparison must detect it.
struct VerifyOptions {
  double lin_cir_diff_sign = 1.0;
  std::uint64_t mc_samples_override = 0;  // 0: use config
};

VerifyReport run_verify(const RunConfig& cfg, const VerifyOptions& opt = {});

void write_spectrum_csv(const std::string& path, const RunConfig& cfg,
                        const SpectrumRun& run);
void write_heterodyne_csv(const std::string& path, const RunConfig& cfg,
                          const HeterodyneRun& run);

}  // namespace carsroa
