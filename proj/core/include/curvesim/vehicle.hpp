#pragma once

#include <array>
#include <string>
#include <vector>

#include "curvesim/body.hpp"
#include "curvesim/road.hpp"
#include "curvesim/tire.hpp"

namespace curvesim {

struct EngineSpec {
  std::vector<std::pair<double, double>> torque_curve;  // (rpm, N m), rpm increasing
  double idle_rpm = 800;
  double redline_rpm = 6000;

  double torque_at(double rpm) const;  // linear interpolation, clamped ends
  void validate() const;
};

struct TransmissionSpec {
  std::vector<double> gear_ratios;      // positive, decreasing
  double final_drive_ratio = 3.5;
  std::vector<double> shift_up_speeds;  // m/s, increasing, size = gears - 1
  double driveline_efficiency = 0.9;

  int gear_for_speed(double speed) const;
  void validate() const;
};

enum class Drivetrain { FWD, RWD, AWD };

const char* drivetrain_name(Drivetrain d);
Drivetrain parse_drivetrain(const std::string& text);  // accepts FWD/RWD/AWD/4WD

enum WheelIndex { kFrontLeft = 0, kFrontRight = 1, kRearLeft = 2, kRearRight = 3 };

// All SI. Config files carry the imperial values and convert on load.
struct VehicleSpec {
  std::string name;
  std::string description;
  double mass = 0;            // kg
  double wheelbase = 0;       // m
  double overall_length = 0;  // m
  double overall_width = 0;   // m
  double overall_height = 0;  // m
  double track_width = 0;     // m; 0 = overall_width - 12 in
  double cg_height = 0;       // m above ground
  double cg_longitudinal_position = 0.5;  // fraction of wheelbase from front axle
  Drivetrain drivetrain = Drivetrain::FWD;
  Eigen::Vector3d inertia{0, 0, 0};  // 0 = solid-cuboid estimate
  double drag_coefficient_area = 0;  // m^2; 0 disables aero drag
  EngineSpec engine;
  TransmissionSpec transmission;
  std::array<WheelSpec, 4> wheels;

  // Fills derived defaults (inertia, track, suspension rates, brake sizing,
  // wheel attachment points) and validates. Must be called before simulating.
  void finalize();
  void validate() const;

  bool wheel_driven(int i) const;
  double front_axle_x() const { return cg_longitudinal_position * wheelbase; }
  double rear_axle_x() const { return -(1.0 - cg_longitudinal_position) * wheelbase; }
  double static_corner_load(int i) const;  // N
};

struct VehicleState {
  RigidBodyState body;
  std::array<WheelState, 4> wheels;
};

struct DriverCommand {
  double throttle = 0;     // [0, 1]
  double brake = 0;        // [0, 1]
  double steer_angle = 0;  // rad, front wheels, + left
};

// Speed-based gear selection and torque routing to the driven axle(s).
std::array<double, 4> powertrain(const VehicleSpec& spec, const VehicleState& state,
                                 double throttle);

struct WheelWorldForce {
  Eigen::Vector3d force{0, 0, 0};  // world frame
  Eigen::Vector3d point{0, 0, 0};  // world application point
};

// Rotates wheel/aero forces into the body frame, adds gravity, and sums
// moments about the CG.
BodyForces aggregate_forces(const VehicleSpec& spec, const RigidBodyState& body,
                            const std::array<WheelWorldForce, 4>& wheel_forces,
                            const Eigen::Vector3d& aero_force_world, double gravity);

enum class Integrator { semi_implicit, rk4 };

struct StepConfig {
  double dt = 0.002;
  Integrator integrator = Integrator::semi_implicit;
  double gravity = 9.80665;
};

// One fixed step of the closed vehicle dynamics (wheels first on the pre-step
// pose, then the body). Throws SimulationFault when the state goes non-finite.
void vehicle_step(const VehicleSpec& spec, VehicleState& state, const RoadModel& road,
                  const SurfaceCondition& condition, const DriverCommand& command,
                  const StepConfig& config);

// Equilibrium placement on the road surface: body z along the surface normal,
// x along the route heading, suspension at static compression.
void place_on_road(const VehicleSpec& spec, VehicleState& state, const RoadModel& road,
                   double station, double lateral, double speed);

// Suspension relaxation with the planar pose pinned, then release at `speed`.
void settle_on_road(const VehicleSpec& spec, VehicleState& state, const RoadModel& road,
                    const SurfaceCondition& condition, double duration,
                    const StepConfig& config);

}  // namespace curvesim
