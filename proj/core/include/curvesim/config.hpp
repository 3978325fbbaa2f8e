#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvesim/aashto.hpp"
#include "curvesim/driver.hpp"
#include "curvesim/road.hpp"
#include "curvesim/search.hpp"
#include "curvesim/sim.hpp"
#include "curvesim/tire.hpp"
#include "curvesim/vehicle.hpp"

namespace curvesim {

struct RouteParams {
  Lane lane = Lane::outer;
  double centerline_offset = units::ft_to_m(1.25);  // + toward the inner edge
  double spacing = units::ft_to_m(10.0);
  std::optional<std::string> route_file;  // import waypoints instead of generating
};

// Fully resolved scenario: everything a run needs, in SI.
struct ScenarioConfig {
  CurveSpec curve;
  RouteParams route;
  std::vector<VehicleSpec> vehicles;
  std::vector<SurfaceCondition> conditions;
  ControlParams control;
  SafetyCriteria criteria;
  SearchParams search;
  SimParams sim;
  AashtoFrictionTable aashto_table;
  std::string out_dir = "out";
  bool deterministic = true;  // reserved; runs are always deterministic
};

// Embedded defaults: the shipped curve, the three shipped vehicles, dry/wet
// surface conditions, and the default friction table.
CurveSpec default_curve();
VehicleSpec default_sedan();
VehicleSpec default_suv();
VehicleSpec default_pickup();
ScenarioConfig default_scenario();

// File loaders (flat key-value; imperial units at this boundary).
CurveSpec load_curve_file(const std::string& path);
VehicleSpec load_vehicle_file(const std::string& path);
SurfaceCondition load_surface_file(const std::string& path);

// Scenario file: top-level sections plus references to curve/vehicle/surface
// files (paths resolved relative to the scenario file).
ScenarioConfig load_scenario(const std::string& path);

// Canonical text form of a resolved scenario (the --dump-config output and
// the input to config_hash).
std::string dump_scenario(const ScenarioConfig& config);

// FNV-1a over the canonical dump. Stable across runs and platforms.
std::uint64_t config_hash(const ScenarioConfig& config);
std::string config_hash_hex(const ScenarioConfig& config);

}  // namespace curvesim
