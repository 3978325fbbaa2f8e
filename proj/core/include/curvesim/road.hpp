#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

namespace curvesim {

// Parametric horizontal curve: approach tangent, circular arc (left turn),
// departure tangent, with a superelevation profile developed through tangent
// runout and superelevation runoff ramps. All lengths in meters (SI); config
// boundaries convert from feet.
struct CurveSpec {
  double radius = 0;                    // arc radius, m
  double arc_length = 0;                // circular portion, m
  double superelevation_rate = 0;       // full cross slope on the curve body
  double lane_width = 0;                // m
  double shoulder_width = 0;            // m
  int lane_count = 1;                   // per direction
  double normal_crown_slope = -0.02;    // tangent cross slope, signed
  double approach_tangent_length = 0;   // m
  double departure_tangent_length = 0;  // m
  std::optional<double> runoff_length;  // m; nullopt = relative-gradient rule
  std::optional<double> runout_length;  // m; nullopt = relative-gradient rule
  double runoff_fraction_before_pc = 0.8;
  double max_relative_gradient = 0.0050;

  void validate() const;  // throws ConfigError
};

// Centerline pose at a station.
struct RoadPose {
  double station = 0;
  Eigen::Vector3d position{0, 0, 0};
  double heading = 0;      // rad, world yaw of the travel direction
  double cross_slope = 0;  // + banks toward the curve center
  double grade = 0;
};

// Result of a ground query. `lateral` is signed distance from the road
// centerline, positive toward the curve center. Off-road queries return
// on_road = false with best-effort station/lateral (a "no contact" result).
struct SurfaceSample {
  bool on_road = false;
  double elevation = 0;
  Eigen::Vector3d normal{0, 0, 1};
  double cross_slope = 0;
  double station = 0;
  double lateral = 0;
  double grade = 0;
};

// Stations of the superelevation transitions, entry and exit.
struct SuperelevationTransitions {
  double entry_runout_begin = 0;
  double entry_runoff_begin = 0;
  double entry_runoff_end = 0;
  double exit_runoff_begin = 0;
  double exit_runoff_end = 0;
  double exit_runout_end = 0;
  bool degenerate = false;  // no cross-slope development exists (e = crown = 0)
};

class RoadModel {
 public:
  // build_road: validates the spec and resolves runout/runoff lengths.
  static RoadModel build(const CurveSpec& spec);

  const CurveSpec& spec() const { return spec_; }
  double pc_station() const { return pc_; }
  double pt_station() const { return pt_; }
  double total_length() const { return total_; }
  double runoff_length() const { return runoff_; }
  double runout_length() const { return runout_; }
  const SuperelevationTransitions& transitions() const { return transitions_; }

  // Piecewise-linear superelevation profile.
  double cross_slope_at(double station) const;

  RoadPose centerline_pose(double station) const;

  // Station/lateral decomposition of a horizontal world point.
  void locate(const Eigen::Vector2d& world_xy, double& station, double& lateral) const;

  SurfaceSample sample(const Eigen::Vector2d& world_xy) const;
  SurfaceSample sample_at(double station, double lateral) const;

  double half_width() const;  // lanes + shoulder, one side
  Eigen::Vector2d curve_center() const { return center_; }

 private:
  CurveSpec spec_;
  double pc_ = 0, pt_ = 0, total_ = 0;
  double runoff_ = 0, runout_ = 0;
  SuperelevationTransitions transitions_;
  Eigen::Vector2d center_{0, 0};   // arc center (left of travel)
  double exit_heading_ = 0;
  Eigen::Vector2d pt_point_{0, 0};
};

enum class Lane { inner, outer };

// Waypoint route along a lane, shifted by a signed centerline offset
// (positive toward the curve-center edge of the lane).
struct Route {
  std::vector<Eigen::Vector3d> waypoints;
  std::vector<double> stations;  // road centerline station per waypoint
  Lane lane = Lane::outer;
  double centerline_offset = 0;  // m
  double spacing = 0;            // m, nominal
  double lane_center_lateral = 0;  // lateral of the followed lane centerline
  double route_lateral = 0;        // lane_center_lateral + centerline_offset

  double start_station() const { return stations.front(); }
  double end_station() const { return stations.back(); }
};

Route generate_route(const RoadModel& road, Lane lane, double centerline_offset,
                     double spacing);

}  // namespace curvesim
