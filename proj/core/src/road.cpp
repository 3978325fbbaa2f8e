#include "curvesim/road.hpp"

#include <cmath>

#include "curvesim/errors.hpp"

namespace curvesim {

namespace {
double lerp(double a, double b, double t) { return a + (b - a) * t; }
}  // namespace

void CurveSpec::validate() const {
  if (radius <= 0) throw ConfigError("curve: radius must be positive");
  if (arc_length <= 0) throw ConfigError("curve: arc_length must be positive");
  if (superelevation_rate < 0 || superelevation_rate >= 0.12)
    throw ConfigError("curve: superelevation_rate must be in [0, 0.12)");
  if (lane_width <= 0) throw ConfigError("curve: lane_width must be positive");
  if (shoulder_width < 0) throw ConfigError("curve: shoulder_width must be >= 0");
  if (lane_count < 1) throw ConfigError("curve: lane_count must be >= 1");
  if (approach_tangent_length < 0 || departure_tangent_length < 0)
    throw ConfigError("curve: tangent lengths must be >= 0");
  if (runoff_length && *runoff_length < 0)
    throw ConfigError("curve: runoff_length must be >= 0");
  if (runout_length && *runout_length < 0)
    throw ConfigError("curve: runout_length must be >= 0");
  if (runoff_fraction_before_pc < 0 || runoff_fraction_before_pc > 1)
    throw ConfigError("curve: runoff_fraction_before_pc must be in [0, 1]");
  if (max_relative_gradient <= 0)
    throw ConfigError("curve: max_relative_gradient must be positive");
}

RoadModel RoadModel::build(const CurveSpec& spec) {
  spec.validate();

  RoadModel road;
  road.spec_ = spec;
  road.pc_ = spec.approach_tangent_length;
  road.pt_ = road.pc_ + spec.arc_length;
  road.total_ = road.pt_ + spec.departure_tangent_length;
  road.center_ = Eigen::Vector2d(road.pc_, spec.radius);
  road.exit_heading_ = spec.arc_length / spec.radius;
  const double phi = road.exit_heading_;
  road.pt_point_ = road.center_ + spec.radius * Eigen::Vector2d(std::sin(phi), -std::cos(phi));

  // Relative-gradient rule: the slope of the edge-of-lane profile relative to
  // the centerline may not exceed max_relative_gradient.
  const double w = spec.lane_width * spec.lane_count;
  road.runoff_ = spec.runoff_length
                     ? *spec.runoff_length
                     : w * spec.superelevation_rate / spec.max_relative_gradient;
  road.runout_ = spec.runout_length
                     ? *spec.runout_length
                     : w * std::abs(spec.normal_crown_slope) / spec.max_relative_gradient;

  const double f = spec.runoff_fraction_before_pc;
  SuperelevationTransitions& tr = road.transitions_;
  tr.entry_runoff_begin = road.pc_ - f * road.runoff_;
  tr.entry_runoff_end = road.pc_ + (1.0 - f) * road.runoff_;
  tr.entry_runout_begin = tr.entry_runoff_begin - road.runout_;
  tr.exit_runoff_begin = road.pt_ - (1.0 - f) * road.runoff_;
  tr.exit_runoff_end = road.pt_ + f * road.runoff_;
  tr.exit_runout_end = tr.exit_runoff_end + road.runout_;
  tr.degenerate = road.runoff_ == 0.0 && road.runout_ == 0.0;

  if (road.runoff_ == 0.0 && spec.superelevation_rate != 0.0)
    throw ConfigError("curve: zero runoff length with nonzero superelevation would "
                      "make the cross-slope profile discontinuous");
  if (road.runout_ == 0.0 && spec.normal_crown_slope != 0.0)
    throw ConfigError("curve: zero runout length with nonzero crown would make the "
                      "cross-slope profile discontinuous");

  if (!tr.degenerate) {
    if (tr.entry_runout_begin < 0)
      throw ConfigError("curve: superelevation development (runout + runoff) is longer "
                        "than the approach tangent");
    if (tr.exit_runout_end > road.total_)
      throw ConfigError("curve: superelevation development is longer than the "
                        "departure tangent");
    if (tr.entry_runoff_end > tr.exit_runoff_begin)
      throw ConfigError("curve: arc too short to reach full superelevation");
  }
  return road;
}

double RoadModel::cross_slope_at(double station) const {
  const SuperelevationTransitions& tr = transitions_;
  const double crown = spec_.normal_crown_slope;
  const double e = spec_.superelevation_rate;
  if (tr.degenerate) return e;  // e == crown == 0 when truly degenerate

  if (station <= tr.entry_runout_begin) return crown;
  if (station < tr.entry_runoff_begin) {
    if (runout_ == 0) return 0.0;
    return lerp(crown, 0.0, (station - tr.entry_runout_begin) / runout_);
  }
  if (station < tr.entry_runoff_end) {
    if (runoff_ == 0) return e;
    return lerp(0.0, e, (station - tr.entry_runoff_begin) / runoff_);
  }
  if (station <= tr.exit_runoff_begin) return e;
  if (station < tr.exit_runoff_end) {
    if (runoff_ == 0) return 0.0;
    return lerp(e, 0.0, (station - tr.exit_runoff_begin) / runoff_);
  }
  if (station < tr.exit_runout_end) {
    if (runout_ == 0) return crown;
    return lerp(0.0, crown, (station - tr.exit_runoff_end) / runout_);
  }
  return crown;
}

RoadPose RoadModel::centerline_pose(double station) const {
  RoadPose pose;
  pose.station = station;
  pose.cross_slope = cross_slope_at(station);
  pose.grade = 0.0;

  double x, y, heading;
  if (station <= pc_) {
    x = station;
    y = 0.0;
    heading = 0.0;
  } else if (station <= pt_) {
    const double phi = (station - pc_) / spec_.radius;
    x = center_.x() + spec_.radius * std::sin(phi);
    y = center_.y() - spec_.radius * std::cos(phi);
    heading = phi;
  } else {
    const double d = station - pt_;
    x = pt_point_.x() + d * std::cos(exit_heading_);
    y = pt_point_.y() + d * std::sin(exit_heading_);
    heading = exit_heading_;
  }
  pose.position = Eigen::Vector3d(x, y, 0.0);
  pose.heading = heading;
  return pose;
}

void RoadModel::locate(const Eigen::Vector2d& p, double& station, double& lateral) const {
  // Wedge test around the arc center picks the segment; the arc subtends
  // exit_heading_ radians starting from the radial direction (0, -1).
  const Eigen::Vector2d d = p - center_;
  const double theta = std::atan2(d.x(), -d.y());  // 0 at PC radial, + in travel dir

  if (theta >= 0.0 && theta <= exit_heading_) {
    station = pc_ + theta * spec_.radius;
    lateral = spec_.radius - d.norm();
    return;
  }
  // Entry tangent frame: travel +x, center side +y.
  const double s_in = p.x();
  if (theta < 0.0 && s_in <= pc_) {
    station = s_in;
    lateral = p.y();
    return;
  }
  // Exit tangent frame.
  const Eigen::Vector2d t(std::cos(exit_heading_), std::sin(exit_heading_));
  const Eigen::Vector2d n(-std::sin(exit_heading_), std::cos(exit_heading_));
  const Eigen::Vector2d rel = p - pt_point_;
  station = pt_ + rel.dot(t);
  lateral = rel.dot(n);
}

double RoadModel::half_width() const {
  return spec_.lane_width * spec_.lane_count + spec_.shoulder_width;
}

SurfaceSample RoadModel::sample_at(double station, double lateral) const {
  SurfaceSample s;
  s.station = station;
  s.lateral = lateral;
  s.cross_slope = cross_slope_at(station);
  s.grade = 0.0;
  s.on_road = station >= 0.0 && station <= total_ && std::abs(lateral) <= half_width();
  // Surface drops toward the curve center when the cross slope is positive.
  s.elevation = -s.cross_slope * lateral;

  const RoadPose pose = centerline_pose(station);
  const Eigen::Vector3d left(-std::sin(pose.heading), std::cos(pose.heading), 0.0);
  Eigen::Vector3d normal = Eigen::Vector3d(0, 0, 1) + s.cross_slope * left;
  s.normal = normal.normalized();
  return s;
}

SurfaceSample RoadModel::sample(const Eigen::Vector2d& world_xy) const {
  double station, lateral;
  locate(world_xy, station, lateral);
  return sample_at(station, lateral);
}

Route generate_route(const RoadModel& road, Lane lane, double centerline_offset,
                     double spacing) {
  const CurveSpec& spec = road.spec();
  if (spacing <= 0) throw ConfigError("route: spacing must be positive");
  if (std::abs(centerline_offset) >= spec.lane_width / 2.0)
    throw ConfigError("route: centerline offset exceeds half the lane width");

  Route route;
  route.lane = lane;
  route.centerline_offset = centerline_offset;
  route.spacing = spacing;
  // Inner lane is on the curve-center side of the road centerline.
  route.lane_center_lateral =
      (lane == Lane::inner ? 0.5 : -0.5) * spec.lane_width;
  route.route_lateral = route.lane_center_lateral + centerline_offset;

  const double lat = route.route_lateral;
  const double route_arc_radius = spec.radius - lat;

  auto emit = [&](double station) {
    const SurfaceSample s = road.sample_at(station, lat);
    const RoadPose pose = road.centerline_pose(station);
    const Eigen::Vector3d left(-std::sin(pose.heading), std::cos(pose.heading), 0.0);
    Eigen::Vector3d p = pose.position + lat * left;
    p.z() = s.elevation;
    route.waypoints.push_back(p);
    route.stations.push_back(station);
  };

  // Tangents: route length equals station length. Arc: the offset path is an
  // arc of radius (R - lateral); spacing is measured along the offset path.
  auto emit_span = [&](double s0, double s1, double path_per_station, bool include_start) {
    const double path_len = (s1 - s0) * path_per_station;
    if (path_len <= 0) return;
    const int n = std::max(1, static_cast<int>(std::round(path_len / spacing)));
    for (int i = include_start ? 0 : 1; i <= n; ++i)
      emit(s0 + (s1 - s0) * static_cast<double>(i) / n);
  };

  emit_span(0.0, road.pc_station(), 1.0, true);
  emit_span(road.pc_station(), road.pt_station(), route_arc_radius / spec.radius, false);
  emit_span(road.pt_station(), road.total_length(), 1.0, false);

  if (route.waypoints.size() < 2) throw ConfigError("route: fewer than 2 waypoints");
  return route;
}

}  // namespace curvesim
