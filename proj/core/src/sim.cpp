#include "curvesim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "curvesim/errors.hpp"

namespace curvesim {

void SafetyCriteria::validate() const {
  if (max_lateral_offset && *max_lateral_offset <= 0)
    throw ConfigError("criteria: max_lateral_offset must be positive");
  if (wheel_lift_pair_duration <= 0)
    throw ConfigError("criteria: wheel_lift_pair_duration must be positive");
  if (max_roll <= 0 || max_heading_error <= 0)
    throw ConfigError("criteria: angle limits must be positive");
}

void SimParams::validate() const {
  if (dt <= 0) throw ConfigError("sim: dt must be positive");
  if (log_hz <= 0) throw ConfigError("sim: log_hz must be positive");
  if (settle_duration < 0) throw ConfigError("sim: settle_duration must be >= 0");
  if (max_sim_time <= 0) throw ConfigError("sim: max_sim_time must be positive");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::safe: return "safe";
    case Verdict::lane_departure: return "lane_departure";
    case Verdict::rollover: return "rollover";
    case Verdict::spin_out: return "spin_out";
    case Verdict::stall: return "stall";
  }
  return "?";
}

Simulation::Simulation(const VehicleSpec& vehicle, const RoadModel& road,
                       const Route& route, const SurfaceCondition& condition,
                       const ControlParams& control, const SafetyCriteria& criteria,
                       const SimParams& params)
    : vehicle_(vehicle),
      road_(road),
      route_(route),
      condition_(condition),
      control_(control),
      criteria_(criteria),
      params_(params) {
  control_.validate();
  criteria_.validate();
  params_.validate();
  condition_.validate();
  plan_ = plan_phases(road_, route_, control_);
  window_begin_ = plan_.segment(Phase::CurveEntry).begin_station;
  window_end_ = plan_.segment(Phase::CurveExit).end_station;
}

namespace {

double wrap_angle(double a) {
  while (a > units::kPi) a -= 2.0 * units::kPi;
  while (a < -units::kPi) a += 2.0 * units::kPi;
  return a;
}

// Signed lateral positions (toward curve center) of the four footprint
// corners, measured from the road centerline.
void footprint_laterals(const VehicleSpec& spec, const RigidBodyState& body,
                        const RoadModel& road, double laterals[4]) {
  const Eigen::Matrix3d r = body.rotation();
  const double hl = spec.overall_length / 2.0;
  const double hw = spec.overall_width / 2.0;
  const Eigen::Vector3d corners[4] = {
      {hl, hw, 0}, {hl, -hw, 0}, {-hl, hw, 0}, {-hl, -hw, 0}};
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector3d p = body.position + r * corners[i];
    double station, lateral;
    road.locate(p.head<2>(), station, lateral);
    laterals[i] = lateral;
  }
}

}  // namespace

RunOutcome Simulation::run(double v_base_mph, double v_curve_mph) const {
  if (v_curve_mph > v_base_mph)
    throw ConfigError("simulate: v_curve must not exceed v_base");

  RunOutcome outcome;
  outcome.v_base_mph = v_base_mph;
  outcome.v_curve_mph = v_curve_mph;
  outcome.trajectory.sample_hz =
      params_.full_rate_log ? 1.0 / params_.dt : params_.log_hz;
  outcome.min_inside_normal_force = std::numeric_limits<double>::infinity();

  const double v_base = units::mph_to_mps(v_base_mph);

  StepConfig step_config;
  step_config.dt = params_.dt;
  step_config.integrator = params_.integrator;
  step_config.gravity = params_.gravity;

  // Warm start: equilibrium placement, suspension relaxation at pinned pose,
  // then release at the base speed. Start far enough in that all wheels are
  // on the road surface.
  VehicleState state;
  const double start_station = route_.start_station() + vehicle_.overall_length;
  place_on_road(vehicle_, state, road_, start_station, route_.route_lateral, 0.0);
  settle_on_road(vehicle_, state, road_, condition_, params_.settle_duration, step_config);
  state.body.time = 0.0;
  state.body.velocity = Eigen::Vector3d(v_base, 0, 0);
  for (int i = 0; i < 4; ++i)
    state.wheels[i].spin_rate = v_base / vehicle_.wheels[i].radius;

  WaypointTracker tracker(route_, control_);
  Phase phase = Phase::NormalDriving;
  double phase_entry_time = 0.0;

  const int log_stride = params_.full_rate_log
                             ? 1
                             : std::max(1, static_cast<int>(std::round(
                                               1.0 / (params_.log_hz * params_.dt))));
  const double end_station =
      std::min(route_.end_station() - 2.0 * route_.spacing, window_end_ + 30.0);

  // Rollover bookkeeping: sustained lift of both wheels on one side.
  double lift_timer_left = 0.0;
  double lift_timer_right = 0.0;

  DriverCommand command;
  long step_index = 0;
  bool failed = false;

  auto fail = [&](Verdict v, double time, double station) {
    outcome.verdict = v;
    outcome.failure_time = time;
    outcome.failure_station = station;
    failed = true;
  };

  while (!failed) {
    double station, lateral;
    road_.locate(state.body.position.head<2>(), station, lateral);
    if (station >= end_station) break;

    // Phase machine only advances forward along the plan.
    const Phase planned = plan_.phase_at(station);
    if (static_cast<int>(planned) > static_cast<int>(phase)) {
      phase = planned;
      phase_entry_time = state.body.time;
    }

    const double speed_mph = units::mps_to_mph(state.body.velocity.x());
    const ThrottleBrake tb = drive_phase(phase, state.body.time - phase_entry_time,
                                         speed_mph, v_base_mph, v_curve_mph, control_);
    const Eigen::Vector3d front =
        state.body.position + state.body.rotation() * Eigen::Vector3d(
                                    vehicle_.front_axle_x(), 0, 0);
    command.throttle = tb.throttle;
    command.brake = tb.brake;
    command.steer_angle =
        tracker.steer(front, state.body.yaw(), vehicle_.wheelbase,
                      state.body.velocity.x(), lateral - route_.route_lateral,
                      params_.dt);

    vehicle_step(vehicle_, state, road_, condition_, command, step_config);
    ++step_index;

    road_.locate(state.body.position.head<2>(), station, lateral);
    const double lateral_offset = lateral - route_.route_lateral;
    const double roll = state.body.roll();
    const bool in_window = station >= window_begin_ && station <= window_end_;

    if (in_window) {
      const double heading_error =
          wrap_angle(state.body.yaw() - road_.centerline_pose(station).heading);

      // Diagnostics.
      outcome.peak_roll = std::max(outcome.peak_roll, std::abs(roll));
      outcome.peak_lateral_offset =
          std::max(outcome.peak_lateral_offset, std::abs(lateral_offset));
      const double inside_n = std::min(state.wheels[kFrontLeft].normal_force,
                                       state.wheels[kRearLeft].normal_force);
      outcome.min_inside_normal_force =
          std::min(outcome.min_inside_normal_force, inside_n);

      // Lane departure.
      if (criteria_.max_lateral_offset) {
        if (std::abs(lateral_offset) > *criteria_.max_lateral_offset)
          fail(Verdict::lane_departure, state.body.time, station);
      } else {
        const double lo = route_.lane_center_lateral - road_.spec().lane_width / 2.0;
        const double hi = route_.lane_center_lateral + road_.spec().lane_width / 2.0;
        double corners[4];
        footprint_laterals(vehicle_, state.body, road_, corners);
        for (double c : corners) {
          if (c < lo || c > hi) {
            fail(Verdict::lane_departure, state.body.time, station);
            break;
          }
        }
      }

      // Rollover: sustained same-side lift or excessive roll.
      const bool left_lift = state.wheels[kFrontLeft].normal_force <= 0.0 &&
                             state.wheels[kRearLeft].normal_force <= 0.0;
      const bool right_lift = state.wheels[kFrontRight].normal_force <= 0.0 &&
                              state.wheels[kRearRight].normal_force <= 0.0;
      lift_timer_left = left_lift ? lift_timer_left + params_.dt : 0.0;
      lift_timer_right = right_lift ? lift_timer_right + params_.dt : 0.0;
      if (!failed && (std::abs(roll) > criteria_.max_roll ||
                      std::max(lift_timer_left, lift_timer_right) >
                          criteria_.wheel_lift_pair_duration))
        fail(Verdict::rollover, state.body.time, station);

      // Spin-out.
      if (!failed && std::abs(heading_error) > criteria_.max_heading_error)
        fail(Verdict::spin_out, state.body.time, station);
    } else {
      lift_timer_left = lift_timer_right = 0.0;
    }

    // Stall: speed collapse or timeout anywhere on the route.
    if (!failed && (state.body.velocity.x() < units::mph_to_mps(1.0) ||
                    state.body.time > params_.max_sim_time))
      fail(Verdict::stall, state.body.time, station);

    // Lateral specific force (what an accelerometer on the body reads).
    const double a_lat = std::abs(state.body.velocity.x() *
                                  state.body.angular_velocity.z());
    if (in_window) outcome.peak_lateral_accel = std::max(outcome.peak_lateral_accel, a_lat);

    if (failed || step_index % log_stride == 0) {
      TrajectoryRow row;
      row.t = state.body.time;
      row.station = station;
      row.x = state.body.position.x();
      row.y = state.body.position.y();
      row.z = state.body.position.z();
      row.speed_mph = speed_mph;
      row.u = state.body.velocity.x();
      row.v = state.body.velocity.y();
      row.w = state.body.velocity.z();
      row.p = state.body.angular_velocity.x();
      row.q = state.body.angular_velocity.y();
      row.r = state.body.angular_velocity.z();
      row.roll = roll;
      row.pitch = state.body.pitch();
      row.yaw = state.body.yaw();
      row.steer_angle = command.steer_angle;
      row.throttle = command.throttle;
      row.brake = command.brake;
      row.phase = static_cast<int>(phase);
      for (int i = 0; i < 4; ++i) {
        row.normal_force[i] = state.wheels[i].normal_force;
        row.slip_long[i] = state.wheels[i].longitudinal_slip;
        row.slip_lat[i] = state.wheels[i].lateral_slip;
      }
      row.lateral_offset = lateral_offset;
      outcome.trajectory.rows.push_back(row);
    }
  }

  if (!std::isfinite(outcome.min_inside_normal_force))
    outcome.min_inside_normal_force = 0.0;
  return outcome;
}

}  // namespace curvesim
