#include "curvesim/driver.hpp"

#include <algorithm>
#include <cmath>

#include "curvesim/errors.hpp"

namespace curvesim {

namespace {
double wrap_angle(double a) {
  while (a > units::kPi) a -= 2.0 * units::kPi;
  while (a < -units::kPi) a += 2.0 * units::kPi;
  return a;
}
}  // namespace

void ControlParams::validate() const {
  if (waypoint_threshold <= 0) throw ConfigError("control: waypoint threshold must be positive");
  if (steering_damping_rate <= 0) throw ConfigError("control: damping rate must be positive");
  if (max_steer_angle <= 0) throw ConfigError("control: max steer angle must be positive");
  if (reaction_delay < 0) throw ConfigError("control: reaction delay must be >= 0");
  if (normal_brake_margin_mph <= 0 || curve_brake_margin_mph <= 0)
    throw ConfigError("control: brake margins must be positive");
  if (hold_throttle <= 0 || hold_throttle > 1)
    throw ConfigError("control: hold throttle must be in (0, 1]");
  if (brake_gain_per_mph <= 0) throw ConfigError("control: brake gain must be positive");
}

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::NormalDriving: return "normal_driving";
    case Phase::CurveEntry: return "curve_entry";
    case Phase::FullSuperelevation: return "full_superelevation";
    case Phase::CurveExit: return "curve_exit";
    case Phase::PostCurveAcceleration: return "post_curve_acceleration";
  }
  return "?";
}

Phase PhasePlan::phase_at(double station) const {
  for (const PhaseSegment& s : segments)
    if (station < s.end_station) return s.phase;
  return Phase::PostCurveAcceleration;
}

PhasePlan plan_phases(const RoadModel& road, const Route& route,
                      const ControlParams& params) {
  const SuperelevationTransitions& tr = road.transitions();
  const double s0 = route.start_station();
  const double s1 = route.end_station();

  double entry_begin, entry_end, exit_begin, exit_end;
  if (tr.degenerate) {
    // No cross-slope development: anchor the speed-transition zones to the
    // arc itself, with entry/exit zones on the adjacent tangents.
    entry_begin = road.pc_station() - params.flat_entry_zone;
    entry_end = road.pc_station();
    exit_begin = road.pt_station();
    exit_end = road.pt_station() + params.flat_entry_zone;
  } else {
    entry_begin = tr.entry_runout_begin;
    entry_end = tr.entry_runoff_end;
    exit_begin = tr.exit_runoff_begin;
    exit_end = tr.exit_runout_end;
  }

  if (entry_begin <= s0 || exit_end >= s1)
    throw ConfigError("phase plan: route is shorter than the curve transitions");

  PhasePlan plan;
  auto set = [&](Phase p, double b, double e, bool curve_target) {
    plan.segments[static_cast<int>(p)] = PhaseSegment{p, b, e, curve_target};
  };
  set(Phase::NormalDriving, s0, entry_begin, false);
  set(Phase::CurveEntry, entry_begin, entry_end, true);
  set(Phase::FullSuperelevation, entry_end, exit_begin, true);
  set(Phase::CurveExit, exit_begin, exit_end, false);
  set(Phase::PostCurveAcceleration, exit_end, s1, false);
  return plan;
}

ThrottleBrake drive_phase(Phase phase, double elapsed_in_phase, double v_mph,
                          double v_base_mph, double v_curve_mph,
                          const ControlParams& params) {
  ThrottleBrake out;
  auto proportional_brake = [&](double target_mph, double margin_mph) {
    const double excess = v_mph - (target_mph + margin_mph);
    return excess > 0 ? std::min(1.0, params.brake_gain_per_mph * excess) : 0.0;
  };

  switch (phase) {
    case Phase::NormalDriving:
      out.throttle = v_mph < v_base_mph ? 1.0 : 0.0;
      out.brake = proportional_brake(v_base_mph, params.normal_brake_margin_mph);
      break;
    case Phase::CurveEntry:
      out.throttle = 0.0;
      out.brake =
          (elapsed_in_phase > params.reaction_delay && v_mph > v_curve_mph) ? 1.0 : 0.0;
      break;
    case Phase::FullSuperelevation:
      out.throttle = v_mph < v_curve_mph ? params.hold_throttle : 0.0;
      out.brake = proportional_brake(v_curve_mph, params.curve_brake_margin_mph);
      break;
    case Phase::CurveExit:
      out.throttle = params.hold_throttle;
      out.brake = 0.0;
      break;
    case Phase::PostCurveAcceleration:
      out.throttle = v_mph < v_base_mph ? 1.0 : 0.0;
      out.brake = 0.0;
      break;
    default:
      throw SimulationFault("drive_phase: unknown phase");
  }
  if (out.brake > 0) out.throttle = 0.0;
  return out;
}

double smooth_steer(double previous, double target, double damping_rate, double dt) {
  return previous + (target - previous) * (1.0 - std::exp(-damping_rate * dt));
}

WaypointTracker::WaypointTracker(const Route& route, const ControlParams& params)
    : route_(route), params_(params) {
  if (route.waypoints.size() < 2) throw ConfigError("tracker: route needs >= 2 waypoints");
}

double WaypointTracker::steer(const Eigen::Vector3d& front_position, double heading,
                              double wheelbase, double speed, double lateral_offset,
                              double dt) {
  const auto& wp = route_.waypoints;
  const Eigen::Vector2d front = front_position.head<2>();
  const Eigen::Vector2d forward(std::cos(heading), std::sin(heading));

  // Advance past pairs whose near waypoint is inside the threshold or already
  // behind the vehicle front.
  while (!finished_) {
    const Eigen::Vector2d rel = wp[index_].head<2>() - front;
    if (rel.norm() >= params_.waypoint_threshold && rel.dot(forward) > 0) break;
    if (index_ + 2 >= wp.size()) {
      finished_ = true;
      break;
    }
    ++index_;
  }

  double target = 0.0;
  if (!finished_) {
    // Pursue a waypoint of the target pair or beyond: at low speed the far
    // waypoint of the pair, at higher speeds the first waypoint past the
    // speed-scaled preview distance.
    const double lookahead =
        std::max(params_.waypoint_threshold, params_.preview_time * std::abs(speed));
    std::size_t goal_index = index_ + 1;
    while (goal_index + 1 < wp.size() &&
           (wp[goal_index].head<2>() - front).norm() < lookahead)
      ++goal_index;
    const Eigen::Vector2d goal = wp[goal_index].head<2>();
    const Eigen::Vector2d rel = goal - front;
    const double dist = rel.norm();
    if (dist > 1e-6) {
      const double bearing = wrap_angle(std::atan2(rel.y(), rel.x()) - heading);
      const double curvature = 2.0 * std::sin(bearing) / dist;
      target = std::atan(wheelbase * curvature);
    }
    // Steer back toward the route line; gain fades with speed.
    target -= std::atan(params_.cross_track_gain * lateral_offset /
                        std::max(std::abs(speed), 5.0));
  }
  target = std::clamp(target, -params_.max_steer_angle, params_.max_steer_angle);
  previous_ = smooth_steer(previous_, target, params_.steering_damping_rate, dt);
  return previous_;
}

}  // namespace curvesim
