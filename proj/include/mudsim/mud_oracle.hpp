#pragma once

#include <string>
#include <vector>

#include "mudsim/errors.hpp"
#include "mudsim/kinematics.hpp"

namespace mudsim {

// Intrinsic substrate strength coefficients, N/m^3. Within the tested water
// range all three decrease as water content rises.
struct MudCoefficients {
  double k_p = 0.0;  // penetration resistance
  double k_s = 0.0;  // shear strength
  double k_e = 0.0;  // extraction resistance

  bool valid() const { return k_p > 0 && k_s > 0 && k_e > 0; }
};

struct MudCatalogEntry {
  double water = 0.0;  // mass fraction of water
  MudCoefficients coeffs;
};

// Ordered water-fraction -> coefficient table. Lookup interpolates linearly
// between knots; water outside the span signals an unphysical mixture.
struct MudCatalog {
  std::vector<MudCatalogEntry> entries;

  void validate() const;  // throws ConfigError on a malformed table
};

MudCoefficients catalog_lookup(const MudCatalog& catalog, double water);

// One stretch of trackway with uniform mud.
struct MudSegment {
  std::string id;
  double x_start = 0.0;
  double x_end = 0.0;
  double water = 0.0;
  MudCoefficients coeffs;
};

// Shear history of one flipper within a stance phase. Solidification latches
// until the demanded reaction exceeds the yield cap.
struct ShearState {
  double shear_displacement = 0.0;  // m of relative tip-mud travel
  bool solidified = false;
};

// First-order rise length of the shear force with slip displacement, m.
inline constexpr double kShearRiseLength = 0.005;

// Extraction force profile: ramp to the peak over the first fraction of
// upward travel, hold briefly, then decay linearly to zero at the surface.
inline constexpr double kExtractionRampFrac = 0.15;
inline constexpr double kExtractionHoldFrac = 0.10;

// Upward-positive resistance against vertical insertion at `depth`.
double penetration_force(double depth, const JointPose& pose, const FlipperGeometry& geom,
                         double k_p);

// Horizontal reaction on the flipper while shearing. `demand` is the
// per-flipper force the robot body requires; when the rising shear force
// covers it the mud solidifies and the flipper anchors at exactly that
// demand. Updates state.solidified; displacement accrual is the caller's.
double shear_force(ShearState& state, double depth, const FlipperGeometry& geom, double k_s,
                   double demand, double rise_length = kShearRiseLength);

// Suction (fz <= 0) while pulling out from maximum insertion depth z_i.
double extraction_force(double current_depth, double z_i, const FlipperGeometry& geom,
                        double k_e, double ramp_frac = kExtractionRampFrac,
                        double hold_frac = kExtractionHoldFrac);

// Peak suction magnitude for a pull starting at z_i.
double extraction_peak(double z_i, const FlipperGeometry& geom, double k_e);

}  // namespace mudsim
