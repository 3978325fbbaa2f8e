#pragma once

#include <array>
#include <cstddef>

#include "curvesim/body.hpp"
#include "curvesim/road.hpp"
#include "curvesim/units.hpp"

namespace curvesim {

struct ControlParams {
  double waypoint_threshold = units::ft_to_m(20.0);  // m
  double steering_damping_rate = 4.0;                // 1/s
  double max_steer_angle = units::deg_to_rad(35.0);  // rad
  double reaction_delay = 1.21;                      // s
  double normal_brake_margin_mph = 2.0;
  double curve_brake_margin_mph = 1.0;
  double hold_throttle = 0.1;
  double brake_gain_per_mph = 0.2;  // proportional brake on speed excess
  // Pursuit preview: the steering goal is the first waypoint at least
  // max(threshold, preview_time * speed) ahead, which keeps the pursuit loop
  // stable as speed rises.
  double preview_time = 1.0;  // s
  // Cross-track correction cancels the pursuit chord cut on curve entry.
  double cross_track_gain = 1.0;  // (m/s per m of offset, Stanley-style)
  // Entry/exit zone length used when the road has no superelevation
  // transitions to anchor the phases to.
  double flat_entry_zone = units::ft_to_m(250.0);  // m

  void validate() const;
};

enum class Phase {
  NormalDriving = 0,
  CurveEntry = 1,
  FullSuperelevation = 2,
  CurveExit = 3,
  PostCurveAcceleration = 4,
};

const char* phase_name(Phase p);

struct PhaseSegment {
  Phase phase = Phase::NormalDriving;
  double begin_station = 0;
  double end_station = 0;
  bool targets_curve_speed = false;  // else the base speed
};

// Contiguous, ordered partition of the route by station.
struct PhasePlan {
  std::array<PhaseSegment, 5> segments;

  Phase phase_at(double station) const;
  const PhaseSegment& segment(Phase p) const { return segments[static_cast<int>(p)]; }
};

// Phase boundaries from the superelevation transitions (entry runout through
// exit runout). Roads without transitions anchor the entry/exit zones to the
// PC/PT instead, using params.flat_entry_zone on the adjacent tangents.
PhasePlan plan_phases(const RoadModel& road, const Route& route,
                      const ControlParams& params);

struct ThrottleBrake {
  double throttle = 0;
  double brake = 0;
};

// Per-phase throttle/brake law. Speeds are mph at this interface.
ThrottleBrake drive_phase(Phase phase, double elapsed_in_phase, double v_mph,
                          double v_base_mph, double v_curve_mph,
                          const ControlParams& params);

// Exponential steering smoother: prev + (target - prev) * (1 - e^(-rate dt)).
double smooth_steer(double previous, double target, double damping_rate, double dt);

// Waypoint-pair tracker: the target pair is the next pair (in list order)
// whose nearer waypoint is farther than the threshold from the vehicle front;
// the wheel angle pursues the pair's far waypoint and is smoothed by the
// damping rate. After the final waypoint the target angle holds zero.
class WaypointTracker {
 public:
  WaypointTracker(const Route& route, const ControlParams& params);

  // lateral_offset: signed distance of the vehicle from the route line,
  // positive to the left of the travel direction (toward the curve center).
  double steer(const Eigen::Vector3d& front_position, double heading, double wheelbase,
               double speed, double lateral_offset, double dt);

  std::size_t target_index() const { return index_; }
  bool finished() const { return finished_; }
  double previous_steer() const { return previous_; }

 private:
  const Route& route_;
  const ControlParams& params_;
  std::size_t index_ = 0;  // near waypoint of the current target pair
  double previous_ = 0;
  bool finished_ = false;
};

}  // namespace curvesim
