#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mudsim/actuator.hpp"
#include "mudsim/gait_controller.hpp"
#include "mudsim/locomotion_sim.hpp"
#include "mudsim/mud_oracle.hpp"

namespace mudsim {

enum class Scenario { Calibrate, SingleFlipper, TrackwayMap, Adapt, Sweep };

struct CalibrationConfig {
  std::vector<double> weights_g = {10, 20, 50, 100, 200, 400, 600, 800};
  int trials_per_weight = 5;
  double moment_arm = 0.115;
};

struct SweepConfig {
  std::vector<std::string> modes;       // "fixed3", "fixed5", "adaptive"
  std::vector<double> catalog_scale;    // multiplies all mud coefficients
  std::vector<double> noise_rel;
};

// One experiment = one file. Unknown keys anywhere are rejected.
struct ExperimentConfig {
  // Built-in five-knot water-to-coefficient table.
  static MudCatalog default_catalog();
  // Built-in three-compartment trackway.
  static std::vector<MudSegment> default_trackway();

  Scenario scenario = Scenario::SingleFlipper;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
  bool plots = false;

  FlipperGeometry geometry;
  MotorSpec motor;
  RobotSpec robot;
  GaitParams gait;
  GaitMode gait_mode = GaitMode::FixedDepth;
  AdaptSettings adapt;
  TrialOptions trial;  // retry policy, budget, threshold, seed filled at run time

  MudCatalog catalog = default_catalog();
  // Mud for the single-flipper scenario: either a catalog water fraction or
  // explicit coefficients.
  double mud_water = 0.476;
  std::optional<MudCoefficients> mud_coeffs;

  std::vector<MudSegment> trackway = default_trackway();

  CalibrationConfig calibration;
  SweepConfig sweep;
};

ExperimentConfig load_config(const std::string& path);       // throws ConfigError
ExperimentConfig parse_config(const std::string& json_text); // throws ConfigError

const char* scenario_name(Scenario s);

}  // namespace mudsim
