#pragma once

#include <optional>
#include <string>

#include "mudsim/config.hpp"
#include "mudsim/locomotion_sim.hpp"

namespace mudsim {

// Stable CSV schemas; the schema-check test parses emitted files against
// these exact header lines.
inline constexpr const char* kSamplesHeader =
    "t,phase,flipper,alpha,beta,I1,I2,tau1,tau2,fx,fz,depth,body_x,body_v,segment";
inline constexpr const char* kStridesHeader =
    "stride,segment,kp_hat,ks_hat,ks_compensated,ke_hat,z_cmd,stride_len,failures";

std::string samples_csv(const TrialResult& result);
std::string strides_csv(const TrialResult& result);

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<bool> plots;
};

void apply_overrides(ExperimentConfig& cfg, const RunOverrides& overrides);

// Assembles the simulation inputs for the locomotion scenarios.
TrialSetup build_trial_setup(const ExperimentConfig& cfg);
// Single uniform-mud "trackway" for the fixed-tank scenario.
Trackway single_mud_trackway(const ExperimentConfig& cfg);

// Executes the configured scenario and writes samples.csv / strides.csv /
// summary.txt (and optional plots) under cfg.out_dir. Throws ConfigError for
// bad configurations and std::runtime_error for runtime failures.
void run_experiment(const ExperimentConfig& cfg);

// Grid runner: one subdirectory and one aggregate row per cell; cell
// failures are flagged in the aggregate and the sweep continues.
void run_sweep(const ExperimentConfig& cfg);

// Vector-graphic emission (plots.cpp); read-only over the result.
std::string traces_svg(const TrialResult& result);
std::string estimates_svg(const TrialResult& result, const Trackway& trackway);

}  // namespace mudsim
