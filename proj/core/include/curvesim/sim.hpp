#pragma once

#include <optional>
#include <string>

#include "curvesim/driver.hpp"
#include "curvesim/road.hpp"
#include "curvesim/tire.hpp"
#include "curvesim/trajectory.hpp"
#include "curvesim/units.hpp"
#include "curvesim/vehicle.hpp"

namespace curvesim {

struct SafetyCriteria {
  // Lane-departure rule: by default the vehicle footprint may not cross the
  // lane edge lines; a fixed CG offset from the route overrides it when set.
  std::optional<double> max_lateral_offset;           // m
  double wheel_lift_pair_duration = 0.2;              // s, both same-side wheels
  double max_roll = units::deg_to_rad(30.0);          // rad
  double max_heading_error = units::deg_to_rad(45.0); // rad, spin-out

  void validate() const;
};

enum class Verdict { safe, lane_departure, rollover, spin_out, stall };

const char* verdict_name(Verdict v);

struct RunOutcome {
  Verdict verdict = Verdict::safe;
  double v_base_mph = 0;
  double v_curve_mph = 0;
  double failure_time = 0;     // valid when verdict != safe
  double failure_station = 0;
  double peak_lateral_accel = 0;      // m/s^2, body-frame specific force
  double peak_roll = 0;               // rad
  double min_inside_normal_force = 0; // N, smaller curve-side wheel in window
  double peak_lateral_offset = 0;     // m from the route line
  TrajectoryLog trajectory;

  bool safe() const { return verdict == Verdict::safe; }
};

struct SimParams {
  double dt = 0.002;
  Integrator integrator = Integrator::semi_implicit;
  double gravity = units::kGravity;
  double settle_duration = 1.0;
  double log_hz = 50.0;
  bool full_rate_log = false;
  double max_sim_time = 600.0;

  void validate() const;
};

// Closed-loop scenario: phase-plan driver + waypoint steering + powertrain +
// wheel/body dynamics, judged against the safety criteria inside the
// evaluation window (entry runout through exit runout).
class Simulation {
 public:
  Simulation(const VehicleSpec& vehicle, const RoadModel& road, const Route& route,
             const SurfaceCondition& condition, const ControlParams& control,
             const SafetyCriteria& criteria, const SimParams& params);

  // simulate_run. Requires v_curve <= v_base.
  RunOutcome run(double v_base_mph, double v_curve_mph) const;

  const PhasePlan& phases() const { return plan_; }
  const VehicleSpec& vehicle() const { return vehicle_; }
  const RoadModel& road() const { return road_; }
  const Route& route() const { return route_; }
  const SurfaceCondition& condition() const { return condition_; }

 private:
  const VehicleSpec& vehicle_;
  const RoadModel& road_;
  const Route& route_;
  const SurfaceCondition& condition_;
  ControlParams control_;
  SafetyCriteria criteria_;
  SimParams params_;
  PhasePlan plan_;
  double window_begin_ = 0;
  double window_end_ = 0;
};

}  // namespace curvesim
