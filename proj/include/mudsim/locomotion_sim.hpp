#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mudsim/actuator.hpp"
#include "mudsim/estimator.hpp"
#include "mudsim/gait_controller.hpp"
#include "mudsim/mud_oracle.hpp"

namespace mudsim {

struct Trackway {
  std::vector<MudSegment> segments;

  double length() const { return segments.empty() ? 0.0 : segments.back().x_end; }
  const MudSegment& segment_at(double x) const;
  void validate() const;  // contiguous, non-overlapping coverage from 0
};

enum class FailureKind { Slip, Extraction };

struct FailureEvent {
  FailureKind kind = FailureKind::Slip;
  int stride = 0;
  std::string segment;
};

// One row of the 380 Hz log, for one flipper.
struct LogRow {
  double t = 0.0;
  Phase phase = Phase::Swing;
  char flipper = 'R';
  double alpha = 0.0, beta = 0.0;
  double current1 = 0.0, current2 = 0.0;
  double tau1 = 0.0, tau2 = 0.0;
  double fx = 0.0, fz = 0.0;  // sensed (noisy) forces
  double depth = 0.0;         // true tip depth
  double body_x = 0.0, body_v = 0.0;
  std::string segment;
};

struct StrideRecord {
  int index = 0;
  std::string segment;
  double z_cmd = 0.0;
  double stride_length = 0.0;
  double duration = 0.0;
  int retries = 0;
  bool stuck = false;
  bool yielded_throughout = false;  // mud never solidified during stance
  bool advancing = false;
  CoefficientEstimate kp, ks_raw, ks_comp, ke;
  bool decision_feasible = false;
  DepthBinding decision_binding = DepthBinding::Clamp;
};

struct SegmentStats {
  std::string id;
  double distance = 0.0;  // m
  double time = 0.0;      // s
  int slip_failures = 0;
  int extraction_failures = 0;
  int stuck_events = 0;

  double velocity() const { return time > 0.0 ? distance / time : 0.0; }
};

struct TrialResult {
  std::vector<StrideRecord> strides;
  std::vector<FailureEvent> failures;
  std::vector<SegmentStats> segment_stats;
  std::vector<LogRow> log;
  double final_x = 0.0;
  int stuck_events = 0;
};

enum class GaitMode { FixedDepth, Adaptive };

struct TrialOptions {
  GaitMode mode = GaitMode::FixedDepth;
  bool static_mount = false;  // body locked, single flipper, fixed tank
  int stride_budget = 200;
  std::uint64_t seed = 1;
  double surface_threshold = kSurfaceThreshold;
  AdaptSettings adapt;

  // Extraction retry policy: dwell at the stalled pose, re-descend a fraction
  // of the insertion depth, then pull again slowly with the suction partially
  // relieved. Exhausting the retries records a Stuck event and the remaining
  // suction is treated as broken by the repeated cycling.
  int max_retries = 3;
  double retry_relief = 0.6;
  double retry_redescend_frac = 0.2;
  double stall_dwell = 0.3;  // s
};

struct TrialSetup {
  Trackway trackway;
  FlipperGeometry geom;
  MotorSpec motor;
  RobotSpec robot;
  GaitParams gait;
  TrialOptions options;
};

TrialResult run_trial(const TrialSetup& setup);

// Failure taxonomy from the stride log: Slip when a stance with the mud
// yielding throughout advanced less than 10% of the commanded arc, Extraction
// when any retry occurred.
std::vector<FailureEvent> detect_failures(const std::vector<StrideRecord>& strides,
                                          double commanded_arc);

}  // namespace mudsim
