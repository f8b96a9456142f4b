#pragma once

#include <cmath>

#include "mudsim/errors.hpp"
#include "mudsim/kinematics.hpp"
#include "mudsim/mud_oracle.hpp"
#include "mudsim/phase.hpp"

namespace mudsim {

inline constexpr double kDegToRad = M_PI / 180.0;

struct GaitParams {
  double insertion_depth = 0.04;  // z_c, m
  double v_insert = 0.1;          // m/s
  double v_stance = 0.5;          // tip arc speed, m/s
  double v_extract = 0.5;
  double v_swing = 0.5;
  double sweep_min = -30.0 * kDegToRad;
  double sweep_max = 30.0 * kDegToRad;
  double inter_phase_pause = 0.0;  // s
  double swing_clearance = 0.01;   // tip height above surface between cycles, m
  double beta_limit = 75.0 * kDegToRad;

  bool valid(const FlipperGeometry& geom) const {
    return v_insert > 0 && v_stance > 0 && v_extract > 0 && v_swing > 0 &&
           insertion_depth > 0 && insertion_depth <= geom.height &&
           sweep_min < sweep_max && inter_phase_pause >= 0 && swing_clearance > 0;
  }
};

enum class DragModel { Constant, ShearScaled };

struct RobotSpec {
  double body_mass = 2.5;           // kg
  double max_lift = 30.4347826087;  // f_m = tau_max / l, N
  DragModel drag_model = DragModel::Constant;
  double body_drag = 2.5;     // f_r for the constant model, N
  double drag_scale = 0.0;    // f_r = drag_scale * k_s for the scaled model, m^3
  double accel_force = 0.1;   // f_a, N

  double drag_for(double k_s) const {
    return drag_model == DragModel::Constant ? body_drag : drag_scale * k_s;
  }
};

enum class DepthBinding { Slip, Extraction, Clamp };

struct DepthDecision {
  double z = 0.0;
  bool feasible = false;
  DepthBinding binding = DepthBinding::Clamp;
};

struct AdaptSettings {
  double margin = 1.2;       // safety factor on both constraints
  double z_min = 0.015;      // m
  double z_bootstrap = 0.04; // first-stride depth before any estimates exist
};

// Insertion depth selection from the latest coefficient estimates: the
// smallest depth whose doubled shear yield covers drag plus inertia (with
// margin), capped by the depth at which extraction suction would reach the
// lift budget. Infeasibility is a flagged result, not an error.
DepthDecision adapt_depth(const MudCoefficients& estimates, const RobotSpec& spec,
                          const FlipperGeometry& geom, const GaitParams& params,
                          const AdaptSettings& settings = {});

struct GaitSetpoint {
  Phase phase = Phase::Insertion;
  JointPose pose;
  double depth_cmd = 0.0;      // commanded tip depth, negative above surface
  double tangential_dx = 0.0;  // fore-aft tip travel relative to body this sample
  bool paused = false;
  bool cycle_complete = false; // set on the sample that closes the Swing phase
};

// Sample-clocked four-phase trajectory generator for one mirrored flipper
// pair. Every step() advances exactly one sample period; phase transitions
// happen only when the phase target has been reached.
class GaitController {
 public:
  GaitController(const GaitParams& params, const FlipperGeometry& geom, double sample_dt);

  GaitSetpoint step();

  // Extraction overrides used by the retry sequence: hold the pose, or move
  // the tip vertically at `depth_rate` (positive = downward).
  GaitSetpoint step_extraction_hold();
  GaitSetpoint step_extraction_move(double depth_rate);

  // Applied at the start of the next insertion. Throws WorkspaceError when
  // the depth is unreachable somewhere along the sweep.
  void set_insertion_depth(double z);

  Phase phase() const { return phase_; }
  double insertion_depth() const { return z_cmd_; }
  double current_depth() const { return depth_; }
  double stance_arc_length() const {
    return geom_.arm_length * (params_.sweep_max - params_.sweep_min);
  }
  // Fore-aft tip travel of a full stance sweep.
  double stance_stride_length() const {
    return geom_.arm_length * (std::sin(params_.sweep_max) - std::sin(params_.sweep_min));
  }

 private:
  GaitSetpoint make_setpoint(double prev_sin_alpha, bool paused);
  void check_reachable(double z) const;

  GaitParams params_;
  FlipperGeometry geom_;
  double dt_;
  Phase phase_ = Phase::Insertion;
  double alpha_;
  double depth_;
  double z_cmd_;
  double z_next_;
  double pause_left_ = 0.0;
  bool phase_done_ = false;
};

}  // namespace mudsim
