#include "curvesim/tire.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curvesim/errors.hpp"

namespace curvesim {

void FrictionCurve::validate() const {
  if (!(extremum_slip > 0) || !(asymptote_slip > extremum_slip))
    throw ConfigError("friction curve: need 0 < extremum_slip < asymptote_slip");
  if (!(asymptote_value > 0) || extremum_value < asymptote_value)
    throw ConfigError("friction curve: need extremum_value >= asymptote_value > 0");
  if (!(stiffness > 0)) throw ConfigError("friction curve: stiffness must be positive");
}

void SurfaceCondition::validate() const {
  longitudinal.validate();
  lateral.validate();
}

namespace {

// Cubic Hermite on [0,1].
double hermite(double p0, double m0, double p1, double m1, double t) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * p0 + (t3 - 2 * t2 + t) * m0 +
         (-2 * t3 + 3 * t2) * p1 + (t3 - t2) * m1;
}

}  // namespace

double evaluate_friction(const FrictionCurve& c, double slip) {
  if (slip < 0) throw std::invalid_argument("evaluate_friction: slip must be >= 0");
  if (slip >= c.asymptote_slip) return c.asymptote_value;
  if (slip == c.extremum_slip) return c.extremum_value;
  if (slip < c.extremum_slip) {
    // Rising branch: zero end-slope at the extremum; initial slope twice the
    // secant keeps the shape Magic-Formula-like while staying monotone.
    const double t = slip / c.extremum_slip;
    const double m0 = 2.0 * c.extremum_value;
    return hermite(0.0, m0, c.extremum_value, 0.0, t);
  }
  const double t = (slip - c.extremum_slip) / (c.asymptote_slip - c.extremum_slip);
  return hermite(c.extremum_value, 0.0, c.asymptote_value, 0.0, t);
}

SurfaceCondition default_dry_condition() {
  SurfaceCondition c;
  c.name = "dry";
  c.longitudinal = FrictionCurve{0.40, 1.00, 0.80, 0.50, 1.00};
  c.lateral = FrictionCurve{0.40, 1.00, 0.80, 0.50, 1.00};
  return c;
}

SurfaceCondition default_wet_condition() {
  SurfaceCondition c;
  c.name = "wet";
  c.longitudinal = FrictionCurve{0.40, 0.65, 0.80, 0.35, 0.85};
  c.lateral = FrictionCurve{0.40, 0.65, 0.80, 0.35, 0.85};
  return c;
}

WheelOutput update_wheel(const WheelSpec& spec, WheelState& state,
                         const WheelContactInput& contact,
                         const SurfaceCondition& condition, double drive_torque,
                         double brake_torque, double dt) {
  WheelOutput out;
  state.in_contact = contact.in_contact;
  state.station_of_contact = contact.station;
  out.brake_decel = brake_torque / spec.rotational_inertia;

  if (!contact.in_contact || contact.compression <= 0.0) {
    state.suspension_compression = std::max(0.0, contact.compression);
    state.normal_force = 0;
    state.longitudinal_slip = 0;
    state.lateral_slip = 0;
    state.tire_force.setZero();
    out.spin_accel = drive_torque / spec.rotational_inertia;
    return out;
  }

  state.suspension_compression = contact.compression;
  double n = spec.spring_rate * contact.compression +
             spec.damper_rate * contact.compression_rate;
  n = std::max(0.0, n);
  state.normal_force = n;
  out.normal_force = n;

  const double denom = std::max(std::abs(contact.v_long), kSlipSpeedFloor);
  const double slip_speed = state.spin_rate * spec.radius - contact.v_long;
  state.longitudinal_slip = slip_speed / denom;
  state.lateral_slip = contact.v_lat / denom;

  // Per-axis force at the axis slip, opposing the slip. Positive longitudinal
  // slip (tread outrunning ground) drives the vehicle forward.
  const FrictionCurve& cl = condition.longitudinal;
  const FrictionCurve& ct = condition.lateral;
  double f_long = std::copysign(
      n * cl.stiffness * evaluate_friction(cl, std::abs(state.longitudinal_slip)),
      state.longitudinal_slip);
  double f_lat = -std::copysign(
      n * ct.stiffness * evaluate_friction(ct, std::abs(state.lateral_slip)),
      state.lateral_slip);

  // Friction ellipse with the peak per-axis forces as semi-axes.
  const double a = n * cl.stiffness * cl.extremum_value;
  const double b = n * ct.stiffness * ct.extremum_value;
  if (a > 0 && b > 0) {
    const double q = (f_long / a) * (f_long / a) + (f_lat / b) * (f_lat / b);
    if (q > 1.0) {
      const double scale = 1.0 / std::sqrt(q);
      f_long *= scale;
      f_lat *= scale;
    }
  }

  // Impulse clamp: a longitudinal force larger than this would overshoot and
  // reverse the slip speed within one step (stiff at low contact speed).
  const double inv_eff_mass =
      spec.radius * spec.radius / spec.rotational_inertia +
      (contact.chassis_mass_share > 0 ? 1.0 / contact.chassis_mass_share : 0.0);
  const double f_cap = std::abs(slip_speed) / (dt * inv_eff_mass);
  f_long = std::clamp(f_long, -f_cap, f_cap);

  state.tire_force = Eigen::Vector2d(f_long, f_lat);
  out.f_long = f_long;
  out.f_lat = f_lat;
  out.spin_accel = (drive_torque - f_long * spec.radius) / spec.rotational_inertia;
  return out;
}

void integrate_wheel_spin(WheelState& state, const WheelOutput& out, double dt) {
  state.spin_rate += out.spin_accel * dt;
  const double brake_step = out.brake_decel * dt;
  if (std::abs(state.spin_rate) <= brake_step)
    state.spin_rate = 0.0;
  else
    state.spin_rate -= std::copysign(brake_step, state.spin_rate);
}

}  // namespace curvesim
