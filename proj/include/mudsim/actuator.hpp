#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mudsim/errors.hpp"
#include "mudsim/phase.hpp"

namespace mudsim {

// Direct-drive motor model. Sensing noise is multiplicative gaussian on the
// current draw; damping and Coulomb friction are negligible for this motor
// class and not modeled.
struct MotorSpec {
  double torque_constant = 0.083;  // k_t, N·m/A
  double torque_limit = 3.5;       // tau_max, N·m
  double noise_rel = 0.032;        // relative current-noise std
  double sample_rate = 380.0;      // Hz

  bool valid() const {
    return torque_constant > 0 && torque_limit > 0 && noise_rel >= 0 && sample_rate > 0;
  }
};

// One row of the 380 Hz proprioceptive log.
struct SampleRecord {
  double t = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double current1 = 0.0;     // sweeping motor, A
  double current2 = 0.0;     // adduction motor, A
  double tau1_sense = 0.0;   // k_t * current1
  double tau2_sense = 0.0;   // k_t * current2
  Phase phase = Phase::Swing;
};

// Deterministic per-motor noise stream; independent streams derive from the
// trial seed plus a stream index so call order across motors cannot matter.
class MotorRng {
 public:
  MotorRng(std::uint64_t trial_seed, std::uint64_t stream_index);
  double gaussian(double sigma);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> unit_{0.0, 1.0};
};

// Current drawn while exerting `tau`, with sensing noise. Throws
// TorqueLimitError when |tau| exceeds the motor limit.
double torque_to_current(double tau, const MotorSpec& spec, MotorRng& rng);

// Proprioceptive torque estimate from a current reading: exactly k_t * I.
double sense_torque(double current, const MotorSpec& spec);

struct CalibrationPoint {
  double mass = 0.0;       // kg
  double tau_ext = 0.0;    // m·g·l ground truth, N·m
  double mean_sense = 0.0; // mean of sensed torque over trials
  double std_sense = 0.0;  // std of sensed torque over trials
};

struct CalibrationResult {
  std::vector<CalibrationPoint> points;
  double rmse = 0.0;  // over all weights and trials
};

inline constexpr double kGravity = 9.81;

// Single-actuator calibration: suspend each weight at moment arm `l`, sense
// the torque through the current channel, and compare with m·g·l.
CalibrationResult run_calibration(const std::vector<double>& weights_kg, double moment_arm,
                                  const MotorSpec& spec, int trials_per_weight,
                                  std::uint64_t seed);

}  // namespace mudsim
