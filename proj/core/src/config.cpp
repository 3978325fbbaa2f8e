#include "curvesim/config.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include "curvesim/errors.hpp"
#include "curvesim/keyvalue.hpp"

namespace curvesim {

namespace {

using units::ft_to_m;
using units::in_to_m;
using units::lb_to_kg;
using units::lbft_to_nm;
using units::mph_to_mps;

std::vector<std::pair<double, double>> torque_curve_nm(
    std::initializer_list<std::pair<double, double>> rpm_lbft) {
  std::vector<std::pair<double, double>> out;
  for (const auto& [rpm, lbft] : rpm_lbft) out.emplace_back(rpm, lbft_to_nm(lbft));
  return out;
}

std::vector<double> mph_list_to_mps(std::initializer_list<double> mph) {
  std::vector<double> out;
  for (double v : mph) out.push_back(mph_to_mps(v));
  return out;
}

}  // namespace

CurveSpec default_curve() {
  CurveSpec c;
  c.radius = ft_to_m(712.0);
  c.arc_length = ft_to_m(1400.0);
  c.superelevation_rate = 0.078;
  c.lane_width = ft_to_m(11.0);
  c.shoulder_width = ft_to_m(4.0);
  c.lane_count = 1;
  c.normal_crown_slope = -0.02;
  c.approach_tangent_length = ft_to_m(500.0);
  c.departure_tangent_length = ft_to_m(500.0);
  c.runoff_fraction_before_pc = 0.8;
  c.max_relative_gradient = 0.0050;
  return c;
}

VehicleSpec default_sedan() {
  VehicleSpec v;
  v.name = "sedan";
  v.description = "2016 Chevrolet Malibu L 1.5 T";
  v.mass = lb_to_kg(3286.0);
  v.wheelbase = in_to_m(111.4);
  v.overall_length = in_to_m(193.8);
  v.overall_width = in_to_m(73.0);
  v.overall_height = in_to_m(57.7);
  v.cg_height = in_to_m(22.0);
  v.drivetrain = Drivetrain::FWD;
  v.engine.torque_curve =
      torque_curve_nm({{800, 120}, {2000, 184}, {4000, 184}, {5600, 150}});
  v.engine.idle_rpm = 800;
  v.engine.redline_rpm = 6000;
  v.transmission.gear_ratios = {4.58, 2.96, 1.91, 1.45, 1.00, 0.75};
  v.transmission.final_drive_ratio = 2.89;
  v.transmission.shift_up_speeds = mph_list_to_mps({15, 28, 42, 56, 72});
  v.transmission.driveline_efficiency = 0.9;
  for (WheelSpec& w : v.wheels) w.radius = in_to_m(13.0);
  v.finalize();
  return v;
}

VehicleSpec default_suv() {
  VehicleSpec v;
  v.name = "suv";
  v.description = "2015 Chevrolet Suburban E85";
  v.mass = lb_to_kg(5864.0);
  v.wheelbase = in_to_m(130.0);
  v.overall_length = in_to_m(224.4);
  v.overall_width = in_to_m(80.5);
  v.overall_height = in_to_m(74.4);
  v.cg_height = in_to_m(32.0);
  v.drivetrain = Drivetrain::RWD;
  v.engine.torque_curve =
      torque_curve_nm({{800, 250}, {2000, 360}, {4100, 383}, {5600, 330}});
  v.engine.idle_rpm = 700;
  v.engine.redline_rpm = 6000;
  v.transmission.gear_ratios = {4.03, 2.36, 1.53, 1.15, 0.85, 0.67};
  v.transmission.final_drive_ratio = 3.42;
  v.transmission.shift_up_speeds = mph_list_to_mps({14, 26, 40, 55, 72});
  v.transmission.driveline_efficiency = 0.9;
  for (WheelSpec& w : v.wheels) w.radius = in_to_m(15.5);
  v.finalize();
  return v;
}

VehicleSpec default_pickup() {
  VehicleSpec v;
  v.name = "pickup";
  v.description = "2015 Ford F-150 3.5-liter EcoBoost V6";
  v.mass = lb_to_kg(5090.0);
  v.wheelbase = in_to_m(145.0);
  v.overall_length = in_to_m(231.9);
  v.overall_width = in_to_m(79.9);
  v.overall_height = in_to_m(77.2);
  v.cg_height = in_to_m(33.0);
  v.drivetrain = Drivetrain::AWD;
  v.engine.torque_curve =
      torque_curve_nm({{800, 250}, {2500, 420}, {4500, 400}, {5700, 350}});
  v.engine.idle_rpm = 750;
  v.engine.redline_rpm = 6000;
  v.transmission.gear_ratios = {4.17, 2.34, 1.52, 1.14, 0.86, 0.69};
  v.transmission.final_drive_ratio = 3.55;
  v.transmission.shift_up_speeds = mph_list_to_mps({14, 26, 40, 55, 72});
  v.transmission.driveline_efficiency = 0.9;
  for (WheelSpec& w : v.wheels) w.radius = in_to_m(16.0);
  v.finalize();
  return v;
}

ScenarioConfig default_scenario() {
  ScenarioConfig cfg;
  cfg.curve = default_curve();
  cfg.vehicles = {default_sedan(), default_suv(), default_pickup()};
  cfg.conditions = {default_dry_condition(), default_wet_condition()};
  cfg.aashto_table = AashtoFrictionTable::green_book_default();
  return cfg;
}

static CurveSpec load_curve_from(const KeyValueFile& kv) {
  CurveSpec c = default_curve();
  c.radius = ft_to_m(kv.get_double("radius_ft"));
  c.arc_length = ft_to_m(kv.get_double("arc_length_ft"));
  c.superelevation_rate = kv.get_double("superelevation_rate");
  c.lane_width = ft_to_m(kv.get_double("lane_width_ft", 11.0));
  c.shoulder_width = ft_to_m(kv.get_double("shoulder_width_ft", 4.0));
  c.lane_count = kv.get_int("lane_count", 1);
  c.normal_crown_slope = kv.get_double("normal_crown_slope", -0.02);
  c.approach_tangent_length = ft_to_m(kv.get_double("approach_tangent_ft", 500.0));
  c.departure_tangent_length = ft_to_m(kv.get_double("departure_tangent_ft", 500.0));
  if (auto v = kv.get_double_or_auto("runoff_length_ft"))
    c.runoff_length = ft_to_m(*v);
  else
    c.runoff_length.reset();
  if (auto v = kv.get_double_or_auto("runout_length_ft"))
    c.runout_length = ft_to_m(*v);
  else
    c.runout_length.reset();
  c.runoff_fraction_before_pc = kv.get_double("runoff_fraction_before_pc", 0.8);
  c.max_relative_gradient = kv.get_double("max_relative_gradient", 0.0050);
  c.validate();
  return c;
}

CurveSpec load_curve_file(const std::string& path) {
  return load_curve_from(KeyValueFile::parse_file(path));
}

VehicleSpec load_vehicle_file(const std::string& path) {
  const KeyValueFile kv = KeyValueFile::parse_file(path);
  VehicleSpec v;
  v.name = kv.get_string("name");
  v.description = kv.get_string("description", "");
  v.mass = lb_to_kg(kv.get_double("mass_lb"));
  v.wheelbase = in_to_m(kv.get_double("wheelbase_in"));
  v.overall_length = in_to_m(kv.get_double("overall_length_in"));
  v.overall_width = in_to_m(kv.get_double("overall_width_in"));
  v.overall_height = in_to_m(kv.get_double("overall_height_in"));
  v.cg_height = in_to_m(kv.get_double("cg_height_in"));
  v.cg_longitudinal_position = kv.get_double("cg_longitudinal_position", 0.5);
  v.drivetrain = parse_drivetrain(kv.get_string("drive_type"));
  if (kv.get_int("axle_count", 2) != 2)
    throw ConfigError(path + ": only two-axle vehicles are supported");
  if (kv.has("track_width_in")) v.track_width = in_to_m(kv.get_double("track_width_in"));
  if (kv.has("inertia_lbft2")) {
    const auto list = kv.get_double_list("inertia_lbft2");
    if (list.size() != 3)
      throw ConfigError(path + ": inertia_lbft2 needs three values (Ix, Iy, Iz)");
    v.inertia = Eigen::Vector3d(units::lbft2_to_kgm2(list[0]),
                                units::lbft2_to_kgm2(list[1]),
                                units::lbft2_to_kgm2(list[2]));
  }
  v.drag_coefficient_area = kv.get_double("drag_coefficient_area_m2", 0.0);

  for (const auto& [rpm, lbft] : kv.get_pair_list("engine.torque_curve_rpm_lbft"))
    v.engine.torque_curve.emplace_back(rpm, lbft_to_nm(lbft));
  v.engine.idle_rpm = kv.get_double("engine.idle_rpm", 800.0);
  v.engine.redline_rpm = kv.get_double("engine.redline_rpm", 6000.0);

  v.transmission.gear_ratios = kv.get_double_list("transmission.gear_ratios");
  v.transmission.final_drive_ratio = kv.get_double("transmission.final_drive_ratio");
  for (double mph : kv.get_double_list("transmission.shift_up_mph"))
    v.transmission.shift_up_speeds.push_back(mph_to_mps(mph));
  v.transmission.driveline_efficiency =
      kv.get_double("transmission.driveline_efficiency", 0.9);

  for (WheelSpec& w : v.wheels) {
    w.radius = in_to_m(kv.get_double("wheel.radius_in"));
    if (kv.has("wheel.suspension_rest_length_in"))
      w.suspension_rest_length = in_to_m(kv.get_double("wheel.suspension_rest_length_in"));
    if (auto s = kv.get_double_or_auto("wheel.spring_rate_lbf_per_in"))
      w.spring_rate = units::lbf_per_in_to_n_per_m(*s);
    if (auto d = kv.get_double_or_auto("wheel.damper_rate_lbf_s_per_in"))
      w.damper_rate = units::lbf_per_in_to_n_per_m(*d);
    if (auto b = kv.get_double_or_auto("wheel.max_brake_torque_lbft"))
      w.max_brake_torque = lbft_to_nm(*b);
    if (auto ri = kv.get_double_or_auto("wheel.rotational_inertia_lbft2"))
      w.rotational_inertia = units::lbft2_to_kgm2(*ri);
  }
  v.finalize();
  return v;
}

namespace {

FrictionCurve load_friction_axis(const KeyValueFile& kv, const std::string& prefix) {
  FrictionCurve c;
  c.extremum_slip = kv.get_double(prefix + ".extremum_slip");
  c.extremum_value = kv.get_double(prefix + ".extremum_value");
  c.asymptote_slip = kv.get_double(prefix + ".asymptote_slip");
  c.asymptote_value = kv.get_double(prefix + ".asymptote_value");
  c.stiffness = kv.get_double(prefix + ".stiffness");
  return c;
}

}  // namespace

SurfaceCondition load_surface_file(const std::string& path) {
  const KeyValueFile kv = KeyValueFile::parse_file(path);
  SurfaceCondition c;
  c.name = kv.get_string("name");
  c.longitudinal = load_friction_axis(kv, "longitudinal");
  c.lateral = load_friction_axis(kv, "lateral");
  c.validate();
  return c;
}

namespace {

Lane parse_lane(const std::string& text) {
  if (text == "inner") return Lane::inner;
  if (text == "outer") return Lane::outer;
  throw ConfigError("route.lane must be 'inner' or 'outer', got '" + text + "'");
}

Integrator parse_integrator(const std::string& text) {
  if (text == "semi_implicit") return Integrator::semi_implicit;
  if (text == "rk4") return Integrator::rk4;
  throw ConfigError("sim.integrator must be 'semi_implicit' or 'rk4', got '" + text + "'");
}

VehicleSpec embedded_vehicle(const std::string& name) {
  if (name == "sedan") return default_sedan();
  if (name == "suv") return default_suv();
  if (name == "pickup") return default_pickup();
  throw ConfigError("unknown embedded vehicle '" + name +
                    "' (expected sedan, suv, or pickup)");
}

SurfaceCondition embedded_condition(const std::string& name) {
  if (name == "dry") return default_dry_condition();
  if (name == "wet") return default_wet_condition();
  throw ConfigError("unknown embedded surface condition '" + name +
                    "' (expected dry or wet)");
}

}  // namespace

ScenarioConfig load_scenario(const std::string& path) {
  const KeyValueFile kv = KeyValueFile::parse_file(path);
  ScenarioConfig cfg = default_scenario();

  if (kv.has("curve_file")) {
    cfg.curve = load_curve_file(kv.resolve_path(kv.get_string("curve_file")));
  } else if (kv.has("curve.radius_ft")) {
    // Inline curve section: re-key and reuse the curve loader.
    std::ostringstream inline_curve;
    for (const std::string& key : kv.keys())
      if (key.rfind("curve.", 0) == 0)
        inline_curve << key.substr(6) << " = " << kv.get_string(key) << "\n";
    cfg.curve = load_curve_from(
        KeyValueFile::parse_string(inline_curve.str(), kv.name() + ":curve"));
  }

  cfg.vehicles.clear();
  if (kv.has("vehicles"))
    for (const std::string& name : kv.get_string_list("vehicles"))
      cfg.vehicles.push_back(embedded_vehicle(name));
  if (kv.has("vehicle_files"))
    for (const std::string& f : kv.get_string_list("vehicle_files"))
      cfg.vehicles.push_back(load_vehicle_file(kv.resolve_path(f)));
  if (cfg.vehicles.empty()) cfg.vehicles = {default_sedan(), default_suv(), default_pickup()};

  cfg.conditions.clear();
  if (kv.has("conditions"))
    for (const std::string& name : kv.get_string_list("conditions"))
      cfg.conditions.push_back(embedded_condition(name));
  if (kv.has("surface_files"))
    for (const std::string& f : kv.get_string_list("surface_files"))
      cfg.conditions.push_back(load_surface_file(kv.resolve_path(f)));
  if (cfg.conditions.empty())
    cfg.conditions = {default_dry_condition(), default_wet_condition()};

  if (kv.has("aashto_table_file"))
    cfg.aashto_table =
        AashtoFrictionTable::load_csv(kv.resolve_path(kv.get_string("aashto_table_file")));

  cfg.out_dir = kv.get_string("out_dir", cfg.out_dir);

  if (kv.has("route.lane")) cfg.route.lane = parse_lane(kv.get_string("route.lane"));
  cfg.route.centerline_offset =
      ft_to_m(kv.get_double("route.offset_ft", units::m_to_ft(cfg.route.centerline_offset)));
  cfg.route.spacing =
      ft_to_m(kv.get_double("route.spacing_ft", units::m_to_ft(cfg.route.spacing)));
  if (kv.has("route.file"))
    cfg.route.route_file = kv.resolve_path(kv.get_string("route.file"));

  ControlParams& ctl = cfg.control;
  ctl.waypoint_threshold = ft_to_m(
      kv.get_double("control.waypoint_threshold_ft", units::m_to_ft(ctl.waypoint_threshold)));
  ctl.steering_damping_rate =
      kv.get_double("control.steering_damping_rate", ctl.steering_damping_rate);
  ctl.max_steer_angle = units::deg_to_rad(
      kv.get_double("control.max_steer_deg", units::rad_to_deg(ctl.max_steer_angle)));
  ctl.reaction_delay = kv.get_double("control.reaction_delay_s", ctl.reaction_delay);
  ctl.normal_brake_margin_mph =
      kv.get_double("control.normal_brake_margin_mph", ctl.normal_brake_margin_mph);
  ctl.curve_brake_margin_mph =
      kv.get_double("control.curve_brake_margin_mph", ctl.curve_brake_margin_mph);
  ctl.hold_throttle = kv.get_double("control.hold_throttle", ctl.hold_throttle);
  ctl.brake_gain_per_mph =
      kv.get_double("control.brake_gain_per_mph", ctl.brake_gain_per_mph);
  ctl.flat_entry_zone =
      ft_to_m(kv.get_double("control.flat_entry_zone_ft", units::m_to_ft(ctl.flat_entry_zone)));
  ctl.validate();

  SafetyCriteria& cr = cfg.criteria;
  if (kv.has("criteria.max_lateral_offset_ft")) {
    if (auto v = kv.get_double_or_auto("criteria.max_lateral_offset_ft"))
      cr.max_lateral_offset = ft_to_m(*v);
    else
      cr.max_lateral_offset.reset();
  }
  cr.wheel_lift_pair_duration =
      kv.get_double("criteria.wheel_lift_pair_duration_s", cr.wheel_lift_pair_duration);
  cr.max_roll = units::deg_to_rad(
      kv.get_double("criteria.max_roll_deg", units::rad_to_deg(cr.max_roll)));
  cr.max_heading_error = units::deg_to_rad(
      kv.get_double("criteria.max_heading_error_deg", units::rad_to_deg(cr.max_heading_error)));
  cr.validate();

  SearchParams& se = cfg.search;
  se.start_mph = kv.get_double("search.start_mph", se.start_mph);
  se.increment_mph = kv.get_double("search.increment_mph", se.increment_mph);
  se.max_mph = kv.get_double("search.max_mph", se.max_mph);
  se.refine = kv.get_bool("search.refine", se.refine);
  se.refine_increment_mph =
      kv.get_double("search.refine_increment_mph", se.refine_increment_mph);
  se.validate();

  SimParams& sp = cfg.sim;
  sp.dt = kv.get_double("sim.dt_s", sp.dt);
  if (kv.has("sim.integrator")) sp.integrator = parse_integrator(kv.get_string("sim.integrator"));
  sp.log_hz = kv.get_double("sim.log_hz", sp.log_hz);
  sp.full_rate_log = kv.get_bool("sim.full_rate_log", sp.full_rate_log);
  sp.settle_duration = kv.get_double("sim.settle_duration_s", sp.settle_duration);
  sp.max_sim_time = kv.get_double("sim.max_sim_time_s", sp.max_sim_time);
  sp.validate();

  cfg.deterministic = kv.get_bool("deterministic", true);
  return cfg;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_friction(std::ostream& os, const std::string& prefix, const FrictionCurve& c) {
  os << prefix << ".extremum_slip = " << num(c.extremum_slip) << "\n"
     << prefix << ".extremum_value = " << num(c.extremum_value) << "\n"
     << prefix << ".asymptote_slip = " << num(c.asymptote_slip) << "\n"
     << prefix << ".asymptote_value = " << num(c.asymptote_value) << "\n"
     << prefix << ".stiffness = " << num(c.stiffness) << "\n";
}

}  // namespace

std::string dump_scenario(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os << "# resolved scenario (SI converted back to the imperial interface units)\n";
  os << "curve.radius_ft = " << num(units::m_to_ft(cfg.curve.radius)) << "\n";
  os << "curve.arc_length_ft = " << num(units::m_to_ft(cfg.curve.arc_length)) << "\n";
  os << "curve.superelevation_rate = " << num(cfg.curve.superelevation_rate) << "\n";
  os << "curve.lane_width_ft = " << num(units::m_to_ft(cfg.curve.lane_width)) << "\n";
  os << "curve.shoulder_width_ft = " << num(units::m_to_ft(cfg.curve.shoulder_width)) << "\n";
  os << "curve.lane_count = " << cfg.curve.lane_count << "\n";
  os << "curve.normal_crown_slope = " << num(cfg.curve.normal_crown_slope) << "\n";
  os << "curve.approach_tangent_ft = "
     << num(units::m_to_ft(cfg.curve.approach_tangent_length)) << "\n";
  os << "curve.departure_tangent_ft = "
     << num(units::m_to_ft(cfg.curve.departure_tangent_length)) << "\n";
  os << "curve.runoff_length_ft = "
     << (cfg.curve.runoff_length ? num(units::m_to_ft(*cfg.curve.runoff_length)) : "auto")
     << "\n";
  os << "curve.runout_length_ft = "
     << (cfg.curve.runout_length ? num(units::m_to_ft(*cfg.curve.runout_length)) : "auto")
     << "\n";
  os << "curve.runoff_fraction_before_pc = " << num(cfg.curve.runoff_fraction_before_pc)
     << "\n";
  os << "curve.max_relative_gradient = " << num(cfg.curve.max_relative_gradient) << "\n";

  os << "route.lane = " << (cfg.route.lane == Lane::outer ? "outer" : "inner") << "\n";
  os << "route.offset_ft = " << num(units::m_to_ft(cfg.route.centerline_offset)) << "\n";
  os << "route.spacing_ft = " << num(units::m_to_ft(cfg.route.spacing)) << "\n";
  if (cfg.route.route_file) os << "route.file = " << *cfg.route.route_file << "\n";

  for (size_t i = 0; i < cfg.vehicles.size(); ++i) {
    const VehicleSpec& v = cfg.vehicles[i];
    const std::string p = "vehicle[" + std::to_string(i) + "]";
    os << p << ".name = " << v.name << "\n";
    os << p << ".mass_lb = " << num(units::kg_to_lb(v.mass)) << "\n";
    os << p << ".wheelbase_in = " << num(units::m_to_in(v.wheelbase)) << "\n";
    os << p << ".overall_length_in = " << num(units::m_to_in(v.overall_length)) << "\n";
    os << p << ".overall_width_in = " << num(units::m_to_in(v.overall_width)) << "\n";
    os << p << ".overall_height_in = " << num(units::m_to_in(v.overall_height)) << "\n";
    os << p << ".cg_height_in = " << num(units::m_to_in(v.cg_height)) << "\n";
    os << p << ".cg_longitudinal_position = " << num(v.cg_longitudinal_position) << "\n";
    os << p << ".track_width_in = " << num(units::m_to_in(v.track_width)) << "\n";
    os << p << ".drive_type = " << drivetrain_name(v.drivetrain) << "\n";
    os << p << ".inertia_kgm2 = " << num(v.inertia.x()) << ", " << num(v.inertia.y())
       << ", " << num(v.inertia.z()) << "\n";
    os << p << ".engine.torque_curve_rpm_lbft = ";
    for (size_t j = 0; j < v.engine.torque_curve.size(); ++j) {
      if (j) os << ", ";
      os << num(v.engine.torque_curve[j].first) << ":"
         << num(units::nm_to_lbft(v.engine.torque_curve[j].second));
    }
    os << "\n";
    os << p << ".engine.idle_rpm = " << num(v.engine.idle_rpm) << "\n";
    os << p << ".engine.redline_rpm = " << num(v.engine.redline_rpm) << "\n";
    os << p << ".transmission.gear_ratios = ";
    for (size_t j = 0; j < v.transmission.gear_ratios.size(); ++j)
      os << (j ? ", " : "") << num(v.transmission.gear_ratios[j]);
    os << "\n";
    os << p << ".transmission.final_drive_ratio = " << num(v.transmission.final_drive_ratio)
       << "\n";
    os << p << ".transmission.shift_up_mph = ";
    for (size_t j = 0; j < v.transmission.shift_up_speeds.size(); ++j)
      os << (j ? ", " : "") << num(units::mps_to_mph(v.transmission.shift_up_speeds[j]));
    os << "\n";
    os << p << ".transmission.driveline_efficiency = "
       << num(v.transmission.driveline_efficiency) << "\n";
    os << p << ".wheel.radius_in = " << num(units::m_to_in(v.wheels[0].radius)) << "\n";
    os << p << ".wheel.spring_rate_n_per_m = " << num(v.wheels[0].spring_rate) << ", "
       << num(v.wheels[2].spring_rate) << "\n";
    os << p << ".wheel.damper_rate_n_s_per_m = " << num(v.wheels[0].damper_rate) << ", "
       << num(v.wheels[2].damper_rate) << "\n";
    os << p << ".wheel.max_brake_torque_lbft = "
       << num(units::nm_to_lbft(v.wheels[0].max_brake_torque)) << "\n";
  }

  for (size_t i = 0; i < cfg.conditions.size(); ++i) {
    const SurfaceCondition& c = cfg.conditions[i];
    const std::string p = "surface[" + std::to_string(i) + "]";
    os << p << ".name = " << c.name << "\n";
    dump_friction(os, p + ".longitudinal", c.longitudinal);
    dump_friction(os, p + ".lateral", c.lateral);
  }

  os << "aashto.table = ";
  for (size_t i = 0; i < cfg.aashto_table.rows.size(); ++i) {
    if (i) os << ", ";
    os << num(cfg.aashto_table.rows[i].first) << ":" << num(cfg.aashto_table.rows[i].second);
  }
  os << "\n";

  const ControlParams& ctl = cfg.control;
  os << "control.waypoint_threshold_ft = " << num(units::m_to_ft(ctl.waypoint_threshold))
     << "\n";
  os << "control.steering_damping_rate = " << num(ctl.steering_damping_rate) << "\n";
  os << "control.max_steer_deg = " << num(units::rad_to_deg(ctl.max_steer_angle)) << "\n";
  os << "control.reaction_delay_s = " << num(ctl.reaction_delay) << "\n";
  os << "control.normal_brake_margin_mph = " << num(ctl.normal_brake_margin_mph) << "\n";
  os << "control.curve_brake_margin_mph = " << num(ctl.curve_brake_margin_mph) << "\n";
  os << "control.hold_throttle = " << num(ctl.hold_throttle) << "\n";
  os << "control.brake_gain_per_mph = " << num(ctl.brake_gain_per_mph) << "\n";
  os << "control.flat_entry_zone_ft = " << num(units::m_to_ft(ctl.flat_entry_zone)) << "\n";

  const SafetyCriteria& cr = cfg.criteria;
  os << "criteria.max_lateral_offset_ft = "
     << (cr.max_lateral_offset ? num(units::m_to_ft(*cr.max_lateral_offset)) : "auto")
     << "\n";
  os << "criteria.wheel_lift_pair_duration_s = " << num(cr.wheel_lift_pair_duration) << "\n";
  os << "criteria.max_roll_deg = " << num(units::rad_to_deg(cr.max_roll)) << "\n";
  os << "criteria.max_heading_error_deg = " << num(units::rad_to_deg(cr.max_heading_error))
     << "\n";

  const SearchParams& se = cfg.search;
  os << "search.start_mph = " << num(se.start_mph) << "\n";
  os << "search.increment_mph = " << num(se.increment_mph) << "\n";
  os << "search.max_mph = " << num(se.max_mph) << "\n";
  os << "search.refine = " << (se.refine ? "true" : "false") << "\n";
  os << "search.refine_increment_mph = " << num(se.refine_increment_mph) << "\n";

  const SimParams& sp = cfg.sim;
  os << "sim.dt_s = " << num(sp.dt) << "\n";
  os << "sim.integrator = "
     << (sp.integrator == Integrator::semi_implicit ? "semi_implicit" : "rk4") << "\n";
  os << "sim.log_hz = " << num(sp.log_hz) << "\n";
  os << "sim.full_rate_log = " << (sp.full_rate_log ? "true" : "false") << "\n";
  os << "sim.settle_duration_s = " << num(sp.settle_duration) << "\n";
  os << "sim.max_sim_time_s = " << num(sp.max_sim_time) << "\n";
  os << "deterministic = " << (cfg.deterministic ? "true" : "false") << "\n";
  return os.str();
}

std::uint64_t config_hash(const ScenarioConfig& cfg) {
  const std::string text = dump_scenario(cfg);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_hash_hex(const ScenarioConfig& cfg) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, config_hash(cfg));
  return buf;
}

}  // namespace curvesim
