#pragma once

#include <Eigen/Core>
#include <string>

namespace curvesim {

// Slip-friction curve: coefficient rises from 0 to extremum_value at
// extremum_slip, falls to asymptote_value at asymptote_slip, constant after.
// Shape is monotone piecewise-cubic through the knots with zero slope at the
// extremum and asymptote. Stiffness multiplies the resulting force, not the
// coefficient returned by evaluate_friction.
struct FrictionCurve {
  double extremum_slip = 0.40;
  double extremum_value = 1.00;
  double asymptote_slip = 0.80;
  double asymptote_value = 0.50;
  double stiffness = 1.00;

  void validate() const;
};

double evaluate_friction(const FrictionCurve& curve, double slip);

struct SurfaceCondition {
  std::string name;
  FrictionCurve longitudinal;
  FrictionCurve lateral;

  void validate() const;
};

// Shipped defaults for dry and wet pavement.
SurfaceCondition default_dry_condition();
SurfaceCondition default_wet_condition();

struct WheelSpec {
  double radius = 0.33;                  // m
  double suspension_rest_length = 0.30;  // m
  double spring_rate = 0;                // N/m; 0 = derived at finalize
  double damper_rate = 0;                // N s/m; 0 = derived
  double max_brake_torque = 0;           // N m; 0 = derived
  double rotational_inertia = 1.2;       // kg m^2
  bool steerable = false;
  bool driven = false;
  Eigen::Vector3d attachment{0, 0, 0};   // chassis hard point, body frame
};

struct WheelState {
  double spin_rate = 0;                // rad/s
  double suspension_compression = 0;   // m
  bool in_contact = false;
  double normal_force = 0;             // N
  double longitudinal_slip = 0;
  double lateral_slip = 0;
  Eigen::Vector2d tire_force{0, 0};    // (longitudinal, lateral), contact frame, N
  double station_of_contact = 0;
};

// Ground contact data assembled by the vehicle from a road query.
struct WheelContactInput {
  bool in_contact = false;
  double compression = 0;       // m
  double compression_rate = 0;  // m/s
  double v_long = 0;            // contact patch velocity, wheel-forward, m/s
  double v_lat = 0;             // contact patch velocity, wheel-left, m/s
  double station = 0;
  double chassis_mass_share = 0;  // kg seen by this contact; 0 = wheel only
};

struct WheelOutput {
  double normal_force = 0;   // along surface normal
  double f_long = 0;         // contact frame
  double f_lat = 0;
  double spin_accel = 0;     // rad/s^2 from drive torque and tire reaction
  double brake_decel = 0;    // rad/s^2 magnitude, applied toward zero spin
};

// Low-speed regularization denominator for both slip definitions.
inline constexpr double kSlipSpeedFloor = 0.5;  // m/s

// Suspension force, slip computation, friction forces and spin acceleration
// for one wheel. Updates the diagnostic fields of `state`; integration of
// spin_rate is left to the caller (see integrate_wheel_spin).
WheelOutput update_wheel(const WheelSpec& spec, WheelState& state,
                         const WheelContactInput& contact,
                         const SurfaceCondition& condition, double drive_torque,
                         double brake_torque, double dt);

// Semi-implicit spin update: free acceleration first, then brake deceleration
// clamped so braking never reverses the spin direction within a step.
void integrate_wheel_spin(WheelState& state, const WheelOutput& out, double dt);

}  // namespace curvesim
