#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mudsim/actuator.hpp"
#include "mudsim/kinematics.hpp"

namespace mudsim {

inline constexpr double kSurfaceThreshold = 0.5;  // N

// Proprioceptive record of one gait cycle for one flipper. Everything the
// estimator consumes is derivable from the sample stream plus the body
// odometry channel; no oracle-side state enters here.
struct StepLog {
  std::vector<SampleRecord> samples;
  std::vector<double> fx;  // derived per sample via torques_to_forces
  std::vector<double> fz;
  std::vector<double> body_x;  // empty in static-mount mode
  std::vector<double> body_v;
  FlipperGeometry geom;

  // Known surface height for the fixed-tank scenario, where the mud level is
  // set by the apparatus rather than detected online.
  std::optional<double> surface_hint;
  // Detection threshold used when no hint is present.
  double surface_threshold = kSurfaceThreshold;
};

// Builds the derived force channels from raw samples.
StepLog build_step_log(std::vector<SampleRecord> samples, const FlipperGeometry& geom,
                       std::vector<double> body_x = {}, std::vector<double> body_v = {});

// Tip height of sample i relative to the nominal surface datum.
double sample_tip_height(const SampleRecord& s, const FlipperGeometry& geom);

struct ContactEvent {
  double t_contact = 0.0;
  std::size_t sample_index = 0;
  double surface_height = 0.0;  // tip height at the contact sample
};

// First insertion-phase sample whose fz reaches the threshold. nullopt means
// no contact (missed terrain or extreme softness); the caller skips the step.
std::optional<ContactEvent> detect_surface(const StepLog& step,
                                           double threshold = kSurfaceThreshold);

enum class EstimateStatus { Ok, NoContact, DegenerateWindow, NoPeak };

struct CoefficientEstimate {
  double value = 0.0;
  double residual_rmse = 0.0;
  double window_start = 0.0;  // s
  double window_end = 0.0;    // s
  bool compensated = false;
  EstimateStatus status = EstimateStatus::Ok;

  bool ok() const { return status == EstimateStatus::Ok; }
};

inline constexpr double kSteadyWindowEta = 0.1;
// Peak-bracketing window for the extraction fit, as fractions of upward
// travel over z_i; sits inside the hold region of the suction profile.
inline constexpr double kPeakWindowLo = 0.16;
inline constexpr double kPeakWindowHi = 0.24;
inline constexpr int kMinInsertionSamples = 10;
inline constexpr int kMinSteadySamples = 20;

// Advancement detection thresholds: body speed above kAdvanceSpeed sustained
// for kAdvanceSamples consecutive stance samples.
inline constexpr double kAdvanceSpeed = 0.005;  // m/s
inline constexpr int kAdvanceSamples = 10;

// Penetration resistance from the insertion ramp. The model is linear in
// k_p, so the RMSE argmin reduces to k_p = sum(G*fz)/sum(G^2).
CoefficientEstimate estimate_kp(const StepLog& step, const FlipperGeometry& geom);

// Maximal suffix of stance where the (low-pass filtered) |dfx/dt| stays below
// a fraction eta of its peak; falls back to the final 50% of stance when the
// test selects fewer than kMinSteadySamples samples.
std::pair<std::size_t, std::size_t> steady_window(const StepLog& step);

// Shear strength over the steady stance window. When the body is advancing
// the mud has solidified and the measured fx saturates at the per-flipper
// demand, so the fit input is compensated with the body drag share.
CoefficientEstimate estimate_ks(const StepLog& step, const FlipperGeometry& geom,
                                double body_drag, bool advancing);

// Extraction resistance from the suction peak region.
CoefficientEstimate estimate_ke(const StepLog& step, const FlipperGeometry& geom);

// True when body_v exceeds kAdvanceSpeed for kAdvanceSamples consecutive
// stance samples.
bool body_advancing(const StepLog& step);

}  // namespace mudsim
