#pragma once

#include "mudsim/errors.hpp"

namespace mudsim {

// Rigid rectangular flipper plate on a 2-DoF arm. Dimensions in meters.
struct FlipperGeometry {
  double arm_length = 0.115;  // l, shoulder to plate mount
  double width = 0.025;       // b, lateral plate width
  double height = 0.07;       // h, plate length below the mount
  double thickness = 0.005;   // t, fore-aft plate thickness

  bool valid() const {
    return arm_length > 0 && width > 0 && height > 0 && thickness > 0;
  }
};

// alpha: sweeping angle, beta: adduction angle, radians.
struct JointPose {
  double alpha = 0.0;
  double beta = 0.0;
};

struct JointTorques {
  double tau1 = 0.0;  // sweeping joint, N·m
  double tau2 = 0.0;  // adduction joint, N·m
};

// Full reaction force on one flipper. fy cancels across a mirrored pair.
struct ForceVector {
  double fx = 0.0;
  double fy = 0.0;
  double fz = 0.0;
};

// The proprioceptively sensed components; fy is not observable from the
// two joint currents.
struct PlanarForce {
  double fx = 0.0;
  double fz = 0.0;
};

// 2x2 map M with [fx; fz] = M · [tau1; tau2].
struct ForceMap {
  double m00 = 0.0, m01 = 0.0;
  double m10 = 0.0, m11 = 0.0;

  double det() const { return m00 * m11 - m01 * m10; }
};

// Determinant threshold below which the map is treated as singular.
inline constexpr double kSingularDetEps = 1e-9;

ForceMap force_map_matrix(const JointPose& pose, const FlipperGeometry& geom);

PlanarForce torques_to_forces(const JointTorques& tau, const JointPose& pose,
                              const FlipperGeometry& geom);

// Inverse map used by the simulator to turn reaction forces into the motor
// torques they induce. Throws SingularPoseError when |det M| < kSingularDetEps.
JointTorques forces_to_torques(const PlanarForce& f, const JointPose& pose,
                               const FlipperGeometry& geom);

// Depth of the plate tip below the mud surface datum for a robot whose
// shoulder sits exactly one plate length above the surface. The plate hangs
// plumb, so depth = l·cos(alpha)·sin(beta); negative values mean the tip is
// airborne.
double tip_depth(const JointPose& pose, const FlipperGeometry& geom);

// Adduction angle that places the plate tip at `depth` for a given sweep
// angle. Throws WorkspaceError when the depth is unreachable within
// |beta| <= beta_limit.
double adduction_for_depth(double depth, double alpha, const FlipperGeometry& geom,
                           double beta_limit);

// Submersion state of the plate. The plate is modeled plumb for force
// projection, so the vertical footprint is the b·t bottom edge and the
// shear-facing width is b at every submerged depth.
struct SubmergedGeometry {
  double depth = 0.0;   // z, tip depth below the surface
  double a_vert = 0.0;  // projected area perpendicular to vertical motion
  double width = 0.0;   // lateral width for shear integration

  double a_vert_at(double z) const { return (z >= 0.0 && z <= depth) ? a_vert : 0.0; }
  double width_at(double z) const { return (z >= 0.0 && z <= depth) ? width : 0.0; }
};

SubmergedGeometry submerged_geometry(const JointPose& pose, const FlipperGeometry& geom,
                                     double tip_depth);

// Trapezoidal quadrature with step <= 0.5 mm, shared by the mud oracle and
// the estimator so the two sides agree on the integral form.
inline constexpr double kQuadratureStep = 0.5e-3;

// G(z) = ∫0^z A_vert(z') dz'
double vertical_area_integral(const SubmergedGeometry& sg);

// S(z) = ∫0^z width(z')·z' dz'
double shear_integral(const SubmergedGeometry& sg);

}  // namespace mudsim
