#include "curvesim/vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curvesim/errors.hpp"
#include "curvesim/units.hpp"

namespace curvesim {

double EngineSpec::torque_at(double rpm) const {
  const auto& c = torque_curve;
  if (rpm <= c.front().first) return c.front().second;
  if (rpm >= c.back().first) return c.back().second;
  for (size_t i = 1; i < c.size(); ++i) {
    if (rpm <= c[i].first) {
      const double t = (rpm - c[i - 1].first) / (c[i].first - c[i - 1].first);
      return c[i - 1].second + t * (c[i].second - c[i - 1].second);
    }
  }
  return c.back().second;
}

void EngineSpec::validate() const {
  if (torque_curve.empty()) throw ConfigError("engine: torque curve is empty");
  for (size_t i = 0; i < torque_curve.size(); ++i) {
    if (torque_curve[i].second < 0)
      throw ConfigError("engine: torque values must be >= 0");
    if (i > 0 && torque_curve[i].first <= torque_curve[i - 1].first)
      throw ConfigError("engine: torque curve rpm points must be strictly increasing");
  }
  if (idle_rpm <= 0 || redline_rpm <= idle_rpm)
    throw ConfigError("engine: need 0 < idle_rpm < redline_rpm");
}

int TransmissionSpec::gear_for_speed(double speed) const {
  for (size_t i = 0; i < shift_up_speeds.size(); ++i)
    if (speed < shift_up_speeds[i]) return static_cast<int>(i);
  return static_cast<int>(gear_ratios.size()) - 1;
}

void TransmissionSpec::validate() const {
  if (gear_ratios.empty()) throw ConfigError("transmission: no gear ratios");
  for (size_t i = 0; i < gear_ratios.size(); ++i) {
    if (gear_ratios[i] <= 0) throw ConfigError("transmission: gear ratios must be positive");
    if (i > 0 && gear_ratios[i] >= gear_ratios[i - 1])
      throw ConfigError("transmission: gear ratios must be decreasing");
  }
  if (shift_up_speeds.size() != gear_ratios.size() - 1)
    throw ConfigError("transmission: need one shift-up speed per gear change");
  for (size_t i = 1; i < shift_up_speeds.size(); ++i)
    if (shift_up_speeds[i] <= shift_up_speeds[i - 1])
      throw ConfigError("transmission: shift-up speeds must be increasing");
  if (final_drive_ratio <= 0) throw ConfigError("transmission: final drive must be positive");
  if (driveline_efficiency <= 0 || driveline_efficiency > 1)
    throw ConfigError("transmission: efficiency must be in (0, 1]");
}

const char* drivetrain_name(Drivetrain d) {
  switch (d) {
    case Drivetrain::FWD: return "FWD";
    case Drivetrain::RWD: return "RWD";
    case Drivetrain::AWD: return "AWD";
  }
  return "?";
}

Drivetrain parse_drivetrain(const std::string& text) {
  if (text == "FWD" || text == "fwd") return Drivetrain::FWD;
  if (text == "RWD" || text == "rwd") return Drivetrain::RWD;
  if (text == "AWD" || text == "awd" || text == "4WD" || text == "4wd")
    return Drivetrain::AWD;
  throw ConfigError("unknown drivetrain '" + text + "' (expected FWD, RWD, AWD/4WD)");
}

bool VehicleSpec::wheel_driven(int i) const {
  switch (drivetrain) {
    case Drivetrain::FWD: return i == kFrontLeft || i == kFrontRight;
    case Drivetrain::RWD: return i == kRearLeft || i == kRearRight;
    case Drivetrain::AWD: return true;
  }
  return false;
}

double VehicleSpec::static_corner_load(int i) const {
  const double axle_share =
      (i == kFrontLeft || i == kFrontRight) ? 1.0 - cg_longitudinal_position
                                            : cg_longitudinal_position;
  return mass * units::kGravity * axle_share / 2.0;
}

void VehicleSpec::validate() const {
  if (mass <= 0) throw ConfigError("vehicle " + name + ": mass must be positive");
  if (cg_height <= 0) throw ConfigError("vehicle " + name + ": cg_height must be positive");
  if (wheelbase <= 0 || wheelbase >= overall_length)
    throw ConfigError("vehicle " + name + ": need 0 < wheelbase < overall_length");
  if (cg_longitudinal_position <= 0 || cg_longitudinal_position >= 1)
    throw ConfigError("vehicle " + name + ": cg_longitudinal_position must be in (0, 1)");
  if (track_width <= 0) throw ConfigError("vehicle " + name + ": track_width must be positive");
  engine.validate();
  transmission.validate();
  for (const WheelSpec& w : wheels) {
    if (w.radius <= 0) throw ConfigError("vehicle " + name + ": wheel radius must be positive");
    if (w.spring_rate <= 0) throw ConfigError("vehicle " + name + ": spring rate must be positive");
    if (w.damper_rate < 0) throw ConfigError("vehicle " + name + ": damper rate must be >= 0");
    if (w.rotational_inertia <= 0)
      throw ConfigError("vehicle " + name + ": wheel inertia must be positive");
  }
}

void VehicleSpec::finalize() {
  if (track_width <= 0) track_width = overall_width - units::in_to_m(12.0);
  if (inertia.x() <= 0 || inertia.y() <= 0 || inertia.z() <= 0) {
    // Solid cuboid from the overall dimensions.
    const double l2 = overall_length * overall_length;
    const double w2 = overall_width * overall_width;
    const double h2 = overall_height * overall_height;
    inertia = Eigen::Vector3d(mass * (w2 + h2) / 12.0, mass * (l2 + h2) / 12.0,
                              mass * (l2 + w2) / 12.0);
  }

  for (int i = 0; i < 4; ++i) {
    WheelSpec& w = wheels[i];
    w.steerable = (i == kFrontLeft || i == kFrontRight);
    w.driven = wheel_driven(i);

    const double corner_load = static_corner_load(i);
    const double corner_mass = corner_load / units::kGravity;
    if (w.spring_rate <= 0) {
      // ~1.2 Hz sprung natural frequency per corner.
      const double wn = 2.0 * units::kPi * 1.2;
      w.spring_rate = corner_mass * wn * wn;
    }
    if (w.damper_rate <= 0) {
      // Damping ratio 0.4.
      w.damper_rate = 2.0 * 0.4 * std::sqrt(w.spring_rate * corner_mass);
    }
    if (w.max_brake_torque <= 0) {
      // Enough to hold a locked wheel at ~1.5 g on the quarter-car load.
      w.max_brake_torque = 1.5 * (mass * units::kGravity / 4.0) * w.radius;
    }

    const double static_compression = corner_load / w.spring_rate;
    const double x = (i == kFrontLeft || i == kFrontRight) ? front_axle_x() : rear_axle_x();
    const double y = (i == kFrontLeft || i == kRearLeft) ? track_width / 2.0
                                                         : -track_width / 2.0;
    const double z = -cg_height + w.radius + w.suspension_rest_length - static_compression;
    w.attachment = Eigen::Vector3d(x, y, z);
  }
  validate();
}

std::array<double, 4> powertrain(const VehicleSpec& spec, const VehicleState& state,
                                 double throttle) {
  std::array<double, 4> torques{0, 0, 0, 0};
  if (throttle <= 0) return torques;
  throttle = std::min(throttle, 1.0);

  const double speed = std::abs(state.body.velocity.x());
  const int gear = spec.transmission.gear_for_speed(speed);
  const double overall =
      spec.transmission.gear_ratios[gear] * spec.transmission.final_drive_ratio;

  int driven_count = 0;
  double spin_sum = 0;
  for (int i = 0; i < 4; ++i) {
    if (!spec.wheel_driven(i)) continue;
    ++driven_count;
    spin_sum += std::abs(state.wheels[i].spin_rate);
  }
  const double rpm = std::clamp(units::radps_to_rpm(spin_sum / driven_count * overall),
                                spec.engine.idle_rpm, spec.engine.redline_rpm);
  const double total = throttle * spec.engine.torque_at(rpm) * overall *
                       spec.transmission.driveline_efficiency;
  for (int i = 0; i < 4; ++i)
    if (spec.wheel_driven(i)) torques[i] = total / driven_count;
  return torques;
}

BodyForces aggregate_forces(const VehicleSpec& spec, const RigidBodyState& body,
                            const std::array<WheelWorldForce, 4>& wheel_forces,
                            const Eigen::Vector3d& aero_force_world, double gravity) {
  BodyForces out;
  const Eigen::Matrix3d r = body.rotation();
  const Eigen::Matrix3d rt = r.transpose();

  for (const WheelWorldForce& wf : wheel_forces) {
    const Eigen::Vector3d f_body = rt * wf.force;
    const Eigen::Vector3d arm = rt * (wf.point - body.position);
    out.force += f_body;
    out.moment += arm.cross(f_body);
  }
  out.force += rt * aero_force_world;
  out.force += spec.mass * gravity_body(body.orientation, gravity);
  return out;
}

namespace {

struct WheelFrame {
  WheelContactInput contact;
  Eigen::Vector3d normal{0, 0, 1};
  Eigen::Vector3d forward{1, 0, 0};
  Eigen::Vector3d left{0, 1, 0};
  Eigen::Vector3d point{0, 0, 0};
};

WheelFrame wheel_contact(const VehicleSpec& spec, int i, const RigidBodyState& body,
                         const RoadModel& road, double steer_angle) {
  const WheelSpec& w = spec.wheels[i];
  WheelFrame out;

  const Eigen::Matrix3d r = body.rotation();
  const Eigen::Vector3d attach_world = body.position + r * w.attachment;
  const Eigen::Vector3d ray = -r.col(2);
  const double max_len = w.suspension_rest_length + w.radius;

  SurfaceSample s = road.sample(attach_world.head<2>());
  if (!s.on_road) return out;

  // Ray/plane intersection, one resample at the hit point for the curved
  // cross-slope profile.
  double dist = max_len;
  for (int pass = 0; pass < 2; ++pass) {
    const double denom = s.normal.dot(ray);
    if (denom >= -1e-6) return out;  // surface behind or parallel
    const Eigen::Vector3d plane_point(attach_world.x(), attach_world.y(), s.elevation);
    const Eigen::Vector3d on_plane =
        pass == 0 ? plane_point
                  : Eigen::Vector3d(out.point.x(), out.point.y(), s.elevation);
    dist = s.normal.dot(on_plane - attach_world) / denom;
    out.point = attach_world + dist * ray;
    if (pass == 0) {
      s = road.sample(out.point.head<2>());
      if (!s.on_road) return out;
    }
  }
  if (dist > max_len) return out;

  out.contact.in_contact = true;
  out.contact.compression = max_len - std::max(dist, 0.0);
  out.contact.station = s.station;
  out.contact.chassis_mass_share = spec.mass / 4.0;
  out.normal = s.normal;

  const double steer = w.steerable ? steer_angle : 0.0;
  const Eigen::Vector3d wheel_fwd = r * Eigen::Vector3d(std::cos(steer), std::sin(steer), 0);
  out.forward = (wheel_fwd - wheel_fwd.dot(s.normal) * s.normal).normalized();
  out.left = s.normal.cross(out.forward);

  const Eigen::Vector3d r_contact_body = w.attachment + Eigen::Vector3d(0, 0, -dist);
  const Eigen::Vector3d v_contact =
      r * (body.velocity + body.angular_velocity.cross(r_contact_body));
  const Eigen::Vector3d v_attach =
      r * (body.velocity + body.angular_velocity.cross(w.attachment));

  out.contact.v_long = v_contact.dot(out.forward);
  out.contact.v_lat = v_contact.dot(out.left);
  out.contact.compression_rate = s.normal.dot(v_attach) / s.normal.dot(ray);
  return out;
}

Eigen::Vector3d aero_force(const VehicleSpec& spec, const RigidBodyState& body) {
  if (spec.drag_coefficient_area <= 0) return Eigen::Vector3d::Zero();
  const Eigen::Vector3d v = body.rotation() * body.velocity;
  constexpr double rho = 1.225;  // kg/m^3
  return -0.5 * rho * spec.drag_coefficient_area * v.norm() * v;
}

struct WheelEval {
  std::array<WheelWorldForce, 4> forces;
  std::array<WheelOutput, 4> outputs;
};

WheelEval evaluate_wheels(const VehicleSpec& spec, VehicleState& state,
                          const RoadModel& road, const SurfaceCondition& condition,
                          const DriverCommand& command, double dt) {
  WheelEval ev;
  const std::array<double, 4> drive = powertrain(spec, state, command.throttle);
  for (int i = 0; i < 4; ++i) {
    const WheelSpec& w = spec.wheels[i];
    const WheelFrame frame =
        wheel_contact(spec, i, state.body, road, command.steer_angle);
    const double brake = std::clamp(command.brake, 0.0, 1.0) * w.max_brake_torque;
    ev.outputs[i] =
        update_wheel(w, state.wheels[i], frame.contact, condition, drive[i], brake, dt);
    ev.forces[i].force = ev.outputs[i].normal_force * frame.normal +
                         ev.outputs[i].f_long * frame.forward +
                         ev.outputs[i].f_lat * frame.left;
    ev.forces[i].point = frame.contact.in_contact ? frame.point : state.body.position;
  }
  return ev;
}

void check_finite(const VehicleState& state, const char* where) {
  const bool ok = state.body.position.allFinite() && state.body.velocity.allFinite() &&
                  state.body.angular_velocity.allFinite() &&
                  state.body.orientation.coeffs().allFinite();
  if (ok) return;
  std::ostringstream os;
  os << "non-finite state in " << where << " at t=" << state.body.time
     << " pos=" << state.body.position.transpose()
     << " vel=" << state.body.velocity.transpose()
     << " omega=" << state.body.angular_velocity.transpose()
     << " quat=" << state.body.orientation.coeffs().transpose() << " spins=[";
  for (int i = 0; i < 4; ++i) os << state.wheels[i].spin_rate << (i < 3 ? " " : "]");
  throw SimulationFault(os.str());
}

struct StateDerivative {
  Eigen::Vector3d pos_dot;
  Eigen::Vector4d q_dot;
  Eigen::Vector3d v_dot;
  Eigen::Vector3d w_dot;
  std::array<double, 4> spin_dot;
};

StateDerivative derivative(const VehicleSpec& spec, const VehicleState& state,
                           const RoadModel& road, const SurfaceCondition& condition,
                           const DriverCommand& command, const StepConfig& config) {
  VehicleState scratch = state;
  const WheelEval ev =
      evaluate_wheels(spec, scratch, road, condition, command, config.dt);
  const BodyForces bf = aggregate_forces(spec, scratch.body, ev.forces,
                                         aero_force(spec, scratch.body), config.gravity);
  const RigidBodyParams params{spec.mass, spec.inertia};
  const BodyDerivative bd = body_acceleration(params, state.body, bf);

  StateDerivative d;
  d.pos_dot = state.body.rotation() * state.body.velocity;
  const Eigen::Quaterniond omega_q(0, state.body.angular_velocity.x(),
                                   state.body.angular_velocity.y(),
                                   state.body.angular_velocity.z());
  d.q_dot = 0.5 * (state.body.orientation * omega_q).coeffs();
  d.v_dot = bd.vdot;
  d.w_dot = bd.wdot;
  for (int i = 0; i < 4; ++i) {
    // Continuous brake approximation for the multi-stage integrator.
    const double spin = state.wheels[i].spin_rate;
    d.spin_dot[i] = ev.outputs[i].spin_accel -
                    (spin != 0 ? std::copysign(ev.outputs[i].brake_decel, spin) : 0.0);
  }
  return d;
}

VehicleState advanced(const VehicleState& s, const StateDerivative& d, double h) {
  VehicleState out = s;
  out.body.position += h * d.pos_dot;
  out.body.orientation.coeffs() += h * d.q_dot;
  out.body.orientation.normalize();
  out.body.velocity += h * d.v_dot;
  out.body.angular_velocity += h * d.w_dot;
  for (int i = 0; i < 4; ++i) out.wheels[i].spin_rate += h * d.spin_dot[i];
  return out;
}

void step_rk4(const VehicleSpec& spec, VehicleState& state, const RoadModel& road,
              const SurfaceCondition& condition, const DriverCommand& command,
              const StepConfig& config) {
  const double dt = config.dt;
  const StateDerivative k1 = derivative(spec, state, road, condition, command, config);
  const StateDerivative k2 =
      derivative(spec, advanced(state, k1, dt / 2), road, condition, command, config);
  const StateDerivative k3 =
      derivative(spec, advanced(state, k2, dt / 2), road, condition, command, config);
  const StateDerivative k4 =
      derivative(spec, advanced(state, k3, dt), road, condition, command, config);

  StateDerivative sum;
  sum.pos_dot = (k1.pos_dot + 2 * k2.pos_dot + 2 * k3.pos_dot + k4.pos_dot) / 6.0;
  sum.q_dot = (k1.q_dot + 2 * k2.q_dot + 2 * k3.q_dot + k4.q_dot) / 6.0;
  sum.v_dot = (k1.v_dot + 2 * k2.v_dot + 2 * k3.v_dot + k4.v_dot) / 6.0;
  sum.w_dot = (k1.w_dot + 2 * k2.w_dot + 2 * k3.w_dot + k4.w_dot) / 6.0;
  for (int i = 0; i < 4; ++i)
    sum.spin_dot[i] =
        (k1.spin_dot[i] + 2 * k2.spin_dot[i] + 2 * k3.spin_dot[i] + k4.spin_dot[i]) / 6.0;

  VehicleState next = advanced(state, sum, dt);
  next.body.time = state.body.time + dt;
  // Refresh wheel diagnostics on the final pose.
  evaluate_wheels(spec, next, road, condition, command, config.dt);
  state = next;
}

}  // namespace

void vehicle_step(const VehicleSpec& spec, VehicleState& state, const RoadModel& road,
                  const SurfaceCondition& condition, const DriverCommand& command,
                  const StepConfig& config) {
  if (config.integrator == Integrator::rk4) {
    step_rk4(spec, state, road, condition, command, config);
    check_finite(state, "rk4 step");
    return;
  }

  // Wheels on the pre-step pose, then the body with the resulting forces.
  const WheelEval ev = evaluate_wheels(spec, state, road, condition, command, config.dt);
  const BodyForces bf = aggregate_forces(spec, state.body, ev.forces,
                                         aero_force(spec, state.body), config.gravity);
  const RigidBodyParams params{spec.mass, spec.inertia};
  integrate_body_semi_implicit(state.body, params, bf, config.dt);
  for (int i = 0; i < 4; ++i) integrate_wheel_spin(state.wheels[i], ev.outputs[i], config.dt);
  check_finite(state, "semi-implicit step");
}

void place_on_road(const VehicleSpec& spec, VehicleState& state, const RoadModel& road,
                   double station, double lateral, double speed) {
  const SurfaceSample s = road.sample_at(station, lateral);
  const RoadPose pose = road.centerline_pose(station);
  const Eigen::Vector3d left(-std::sin(pose.heading), std::cos(pose.heading), 0.0);
  Eigen::Vector3d surface_point = pose.position + lateral * left;
  surface_point.z() = s.elevation;

  const Eigen::Vector3d z = s.normal;
  const Eigen::Vector3d travel(std::cos(pose.heading), std::sin(pose.heading), 0.0);
  const Eigen::Vector3d x = (travel - travel.dot(z) * z).normalized();
  const Eigen::Vector3d y = z.cross(x);
  Eigen::Matrix3d r;
  r.col(0) = x;
  r.col(1) = y;
  r.col(2) = z;

  state.body.position = surface_point + spec.cg_height * z;
  state.body.orientation = Eigen::Quaterniond(r).normalized();
  state.body.velocity = Eigen::Vector3d(speed, 0, 0);
  state.body.angular_velocity.setZero();
  for (int i = 0; i < 4; ++i) {
    state.wheels[i] = WheelState{};
    state.wheels[i].spin_rate = speed / spec.wheels[i].radius;
  }
}

void settle_on_road(const VehicleSpec& spec, VehicleState& state, const RoadModel& road,
                    const SurfaceCondition& condition, double duration,
                    const StepConfig& config) {
  const Eigen::Vector2d pinned = state.body.position.head<2>();
  const int steps = static_cast<int>(std::ceil(duration / config.dt));
  for (int k = 0; k < steps; ++k) {
    vehicle_step(spec, state, road, condition, DriverCommand{}, config);
    state.body.position.head<2>() = pinned;
    state.body.velocity.x() = 0;
    state.body.velocity.y() = 0;
    state.body.angular_velocity.z() = 0;
  }
}

}  // namespace curvesim
