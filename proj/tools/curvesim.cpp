// curvesim command line: scenario simulation, safe-speed sweeps, the AASHTO
// design-speed benchmark, and route export.
//
// Exit codes: 0 success/safe, 1 usage or config error, 2 unsafe verdict,
// 3 internal fault.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvesim/aashto.hpp"
#include "curvesim/config.hpp"
#include "curvesim/errors.hpp"
#include "curvesim/report.hpp"
#include "curvesim/search.hpp"
#include "curvesim/sim.hpp"
#include "curvesim/version.hpp"

namespace fs = std::filesystem;
using namespace curvesim;

namespace {

struct SweepOptions {
  std::string config_path;
  std::string out_dir;
  bool force = false;
  std::string observed_path;
  std::vector<std::string> vehicles;
  std::vector<std::string> conditions;
};

void prepare_out_dir(const std::string& dir, bool force) {
  const fs::path p(dir);
  if (fs::exists(p) && !fs::is_empty(p) && !force)
    throw ConfigError("output directory '" + dir +
                      "' exists and is not empty (use --force to overwrite)");
  fs::create_directories(p);
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write output file: " + path.string());
  return os;
}

// Reconstruct lane/offset bookkeeping for an imported waypoint list.
void attach_route_frame(const RoadModel& road, Route& route) {
  const Eigen::Vector3d& mid = route.waypoints[route.waypoints.size() / 2];
  double station, lateral;
  road.locate(mid.head<2>(), station, lateral);
  route.route_lateral = lateral;
  route.lane = lateral >= 0 ? Lane::inner : Lane::outer;
  route.lane_center_lateral =
      (route.lane == Lane::inner ? 0.5 : -0.5) * road.spec().lane_width;
  route.centerline_offset = route.route_lateral - route.lane_center_lateral;
}

Route make_route(const ScenarioConfig& cfg, const RoadModel& road) {
  if (cfg.route.route_file) {
    Route route = load_route_csv(*cfg.route.route_file);
    attach_route_frame(road, route);
    return route;
  }
  return generate_route(road, cfg.route.lane, cfg.route.centerline_offset,
                        cfg.route.spacing);
}

int cmd_simulate(const std::string& config_path, const std::string& out_override,
                 bool force, double v_curve, double v_base) {
  ScenarioConfig cfg = load_scenario(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  if (v_base <= 0) v_base = v_curve + 5.0;
  if (cfg.vehicles.empty()) throw ConfigError("simulate: no vehicle configured");

  const RoadModel road = RoadModel::build(cfg.curve);
  const Route route = make_route(cfg, road);
  const FileHeader header{config_hash_hex(cfg), kTrajectorySchema};

  prepare_out_dir(cfg.out_dir, force);

  int exit_code = 0;
  for (const VehicleSpec& vehicle : cfg.vehicles) {
    for (const SurfaceCondition& condition : cfg.conditions) {
      Simulation sim(vehicle, road, route, condition, cfg.control, cfg.criteria, cfg.sim);
      const RunOutcome outcome = sim.run(v_base, v_curve);

      const std::string stem = vehicle.name + "_" + condition.name;
      {
        auto os = open_out(fs::path(cfg.out_dir) / (stem + "_trajectory.csv"));
        write_trajectory_csv(os, outcome.trajectory, header);
      }
      {
        auto os = open_out(fs::path(cfg.out_dir) / (stem + "_outcome.json"));
        write_outcome_json(os, outcome, FileHeader{header.config_hash, kOutcomeSchema});
      }
      std::cout << vehicle.name << "/" << condition.name << " at v_curve " << v_curve
                << " mph (v_base " << v_base << "): " << verdict_name(outcome.verdict)
                << "\n";
      if (!outcome.safe()) exit_code = 2;
    }
  }
  return exit_code;
}

int cmd_sweep(const SweepOptions& opt) {
  ScenarioConfig cfg = load_scenario(opt.config_path);
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;

  // Optional subset filters.
  auto keep = [](const std::vector<std::string>& filter, const std::string& name) {
    if (filter.empty()) return true;
    for (const std::string& f : filter)
      if (f == name) return true;
    return false;
  };
  std::vector<VehicleSpec> vehicles;
  for (const VehicleSpec& v : cfg.vehicles)
    if (keep(opt.vehicles, v.name)) vehicles.push_back(v);
  std::vector<SurfaceCondition> conditions;
  for (const SurfaceCondition& c : cfg.conditions)
    if (keep(opt.conditions, c.name)) conditions.push_back(c);
  if (vehicles.empty()) throw ConfigError("sweep: no vehicles selected");
  if (conditions.empty()) throw ConfigError("sweep: no conditions selected");

  std::map<std::pair<std::string, std::string>, double> observed;
  if (!opt.observed_path.empty()) observed = load_observed_csv(opt.observed_path);

  const RoadModel road = RoadModel::build(cfg.curve);
  const Route route = make_route(cfg, road);
  const FileHeader header{config_hash_hex(cfg), kReportSchema};

  prepare_out_dir(cfg.out_dir, opt.force);

  const AashtoResult aashto = aashto_design_speed(
      units::m_to_ft(cfg.curve.radius), cfg.curve.superelevation_rate, cfg.aashto_table);
  std::cout << "aashto design speed: " << aashto.design_speed_mph << " mph ("
            << aashto.rounded_down_5_mph << " rounded down to 5 mph)\n";

  std::vector<ManifestEntry> cells;
  for (const VehicleSpec& v : vehicles)
    for (const SurfaceCondition& c : conditions)
      cells.push_back(ManifestEntry{v.name, c.name, false});

  auto write_manifest = [&](bool complete) {
    auto os = open_out(fs::path(cfg.out_dir) / "MANIFEST.json");
    write_manifest_json(os, cells, complete, header);
  };

  std::vector<SpeedSearchResult> results;
  size_t cell_index = 0;
  try {
    for (const VehicleSpec& vehicle : vehicles) {
      for (const SurfaceCondition& condition : conditions) {
        Simulation sim(vehicle, road, route, condition, cfg.control, cfg.criteria,
                       cfg.sim);
        SpeedSearchResult result =
            find_max_safe_speed(sim, cfg.search, vehicle.name, condition.name);
        result.aashto_mph = aashto.design_speed_mph;
        const auto obs = observed.find({vehicle.name, condition.name});
        if (obs != observed.end()) result.observed_mph = obs->second;

        const std::string stem = vehicle.name + "_" + condition.name;
        {
          auto os = open_out(fs::path(cfg.out_dir) / (stem + "_result.json"));
          write_search_result_json(os, result, header);
        }
        {
          auto os =
              open_out(fs::path(cfg.out_dir) / (stem + "_max_safe_trajectory.csv"));
          write_trajectory_csv(os, result.boundary_safe.trajectory,
                               FileHeader{header.config_hash, kTrajectorySchema});
        }
        if (!result.capped) {
          auto os =
              open_out(fs::path(cfg.out_dir) / (stem + "_first_unsafe_trajectory.csv"));
          write_trajectory_csv(os, result.boundary_unsafe.trajectory,
                               FileHeader{header.config_hash, kTrajectorySchema});
        }
        std::cout << vehicle.name << "/" << condition.name << ": max safe "
                  << result.max_safe_mph << " mph";
        if (!result.capped)
          std::cout << " (fails at " << result.first_unsafe_mph << " mph, "
                    << verdict_name(result.first_unsafe_verdict) << ")";
        std::cout << "\n";

        cells[cell_index++].completed = true;
        results.push_back(std::move(result));
      }
    }
  } catch (...) {
    write_manifest(false);  // partial results stay on disk
    throw;
  }

  const ComparisonReport report = compare_report(results);
  {
    auto os = open_out(fs::path(cfg.out_dir) / "report.csv");
    write_report_csv(os, report, header);
  }
  {
    auto os = open_out(fs::path(cfg.out_dir) / "report.json");
    write_report_json(os, report, header);
  }
  if (!observed.empty()) {
    auto os = open_out(fs::path(cfg.out_dir) / "deviations.csv");
    write_deviation_csv(os, report, header);
  }
  write_manifest(true);
  return 0;
}

int cmd_aashto(double radius_ft, double superelevation, const std::string& table_path,
               double fmax_const, bool round_only) {
  AashtoFrictionTable table = AashtoFrictionTable::green_book_default();
  if (!table_path.empty()) table = AashtoFrictionTable::load_csv(table_path);
  if (fmax_const > 0) {
    table.rows = {{1.0, fmax_const}, {200.0, fmax_const}};
  }
  const AashtoResult r = aashto_design_speed(radius_ft, superelevation, table);
  if (round_only) {
    std::cout << r.rounded_down_5_mph << "\n";
  } else {
    std::cout << "design_speed_mph = " << r.design_speed_mph << "\n";
    std::cout << "rounded_down_5_mph = " << r.rounded_down_5_mph << "\n";
  }
  return 0;
}

int cmd_route_export(const std::string& config_path, const std::string& out_override,
                     bool force) {
  ScenarioConfig cfg = load_scenario(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  const RoadModel road = RoadModel::build(cfg.curve);
  const Route route = make_route(cfg, road);
  prepare_out_dir(cfg.out_dir, force);
  auto os = open_out(fs::path(cfg.out_dir) / "route.csv");
  write_route_csv(os, route, FileHeader{config_hash_hex(cfg), kRouteSchema});
  std::cout << "wrote " << route.waypoints.size() << " waypoints\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvesim: digital-twin safe curve speed estimation"};
  app.set_version_flag("--version", std::string("curvesim ") + kVersion);

  bool dump_config = false;
  std::string top_config;
  app.add_flag("--dump-config", dump_config,
               "print the resolved scenario config (defaults, or --config)");
  app.add_option("--config", top_config, "scenario file for --dump-config");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "run one scenario at fixed speeds");
  std::string sim_config, sim_out;
  bool sim_force = false;
  double v_curve = 0, v_base = 0;
  sim_cmd->add_option("--config", sim_config, "scenario file")->required();
  sim_cmd->add_option("--out", sim_out, "output directory (overrides scenario)");
  sim_cmd->add_flag("--force", sim_force, "overwrite a non-empty output directory");
  sim_cmd->add_option("--v-curve", v_curve, "curve target speed, mph")->required();
  sim_cmd->add_option("--v-base", v_base, "tangent speed, mph (default v_curve + 5)");

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "find max safe speeds per vehicle and condition");
  SweepOptions sweep;
  sweep_cmd->add_option("--config", sweep.config_path, "scenario file")->required();
  sweep_cmd->add_option("--out", sweep.out_dir, "output directory (overrides scenario)");
  sweep_cmd->add_flag("--force", sweep.force, "overwrite a non-empty output directory");
  sweep_cmd->add_option("--observed", sweep.observed_path,
                        "observed speeds CSV (vehicle, condition, observed_max_mph)");
  sweep_cmd->add_option("--vehicles", sweep.vehicles, "subset of vehicle names")
      ->delimiter(',');
  sweep_cmd->add_option("--conditions", sweep.conditions, "subset of condition names")
      ->delimiter(',');

  // aashto
  auto* aashto_cmd = app.add_subcommand("aashto", "AASHTO design speed for a curve");
  double radius_ft = 0, superelevation = 0, fmax_const = 0;
  std::string table_path;
  bool round_only = false;
  aashto_cmd->add_option("--radius-ft", radius_ft, "curve radius, ft")->required();
  aashto_cmd->add_option("--superelevation", superelevation, "cross slope, ft/ft")
      ->required();
  aashto_cmd->add_option("--table", table_path, "side-friction table CSV");
  aashto_cmd->add_option("--fmax-const", fmax_const,
                         "override the table with a constant f_max");
  aashto_cmd->add_flag("--round", round_only, "print only the 5 mph-rounded value");

  // route-export
  auto* route_cmd = app.add_subcommand("route-export", "write the waypoint route CSV");
  std::string route_config, route_out;
  bool route_force = false;
  route_cmd->add_option("--config", route_config, "scenario file")->required();
  route_cmd->add_option("--out", route_out, "output directory (overrides scenario)");
  route_cmd->add_flag("--force", route_force, "overwrite a non-empty output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (dump_config) {
      const ScenarioConfig cfg =
          top_config.empty() ? default_scenario() : load_scenario(top_config);
      std::cout << dump_scenario(cfg);
      return 0;
    }
    if (*sim_cmd) return cmd_simulate(sim_config, sim_out, sim_force, v_curve, v_base);
    if (*sweep_cmd) return cmd_sweep(sweep);
    if (*aashto_cmd)
      return cmd_aashto(radius_ft, superelevation, table_path, fmax_const, round_only);
    if (*route_cmd) return cmd_route_export(route_config, route_out, route_force);
    std::cerr << app.help() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const SimulationFault& e) {
    std::cerr << "fault: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "fault: " << e.what() << "\n";
    return 3;
  }
}
