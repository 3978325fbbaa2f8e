#pragma once

#include <array>
#include <vector>

namespace curvesim {

// One sampled row of a simulation run. Positions/lengths m, speeds mph where
// named so, angles rad, forces N.
struct TrajectoryRow {
  double t = 0;
  double station = 0;
  double x = 0, y = 0, z = 0;
  double speed_mph = 0;
  double u = 0, v = 0, w = 0;
  double p = 0, q = 0, r = 0;
  double roll = 0, pitch = 0, yaw = 0;
  double steer_angle = 0;
  double throttle = 0, brake = 0;
  int phase = 0;
  std::array<double, 4> normal_force{0, 0, 0, 0};
  std::array<double, 4> slip_long{0, 0, 0, 0};
  std::array<double, 4> slip_lat{0, 0, 0, 0};
  double lateral_offset = 0;  // m, from the route line (+ toward curve center)
};

struct TrajectoryLog {
  double sample_hz = 50.0;
  std::vector<TrajectoryRow> rows;
};

}  // namespace curvesim
