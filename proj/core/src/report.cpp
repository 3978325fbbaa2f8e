#include "curvesim/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "curvesim/errors.hpp"
#include "curvesim/units.hpp"
#include "curvesim/version.hpp"

namespace curvesim {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

void write_header_comment(std::ostream& os, const FileHeader& header) {
  os << "# curvesim " << kVersion << "\n";
  os << "# schema=" << header.schema << "\n";
  os << "# config_hash=" << header.config_hash << "\n";
  os << "# units: lengths ft, speeds mph, angles rad, forces N unless suffixed\n";
}

void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log,
                          const FileHeader& header) {
  write_header_comment(os, header);
  os << "t,station_ft,x_ft,y_ft,z_ft,speed_mph,u,v,w,p,q,r,roll,pitch,yaw,"
        "steer_angle,throttle,brake,phase,"
        "n_fl,n_fr,n_rl,n_rr,slip_long_fl,slip_long_fr,slip_long_rl,slip_long_rr,"
        "slip_lat_fl,slip_lat_fr,slip_lat_rl,slip_lat_rr,lateral_offset_ft\n";
  for (const TrajectoryRow& r : log.rows) {
    os << fmt(r.t) << ',' << fmt(units::m_to_ft(r.station)) << ','
       << fmt(units::m_to_ft(r.x)) << ',' << fmt(units::m_to_ft(r.y)) << ','
       << fmt(units::m_to_ft(r.z)) << ',' << fmt(r.speed_mph) << ',' << fmt(r.u) << ','
       << fmt(r.v) << ',' << fmt(r.w) << ',' << fmt(r.p) << ',' << fmt(r.q) << ','
       << fmt(r.r) << ',' << fmt(r.roll) << ',' << fmt(r.pitch) << ',' << fmt(r.yaw)
       << ',' << fmt(r.steer_angle) << ',' << fmt(r.throttle) << ',' << fmt(r.brake)
       << ',' << r.phase;
    for (double n : r.normal_force) os << ',' << fmt(n);
    for (double s : r.slip_long) os << ',' << fmt(s);
    for (double s : r.slip_lat) os << ',' << fmt(s);
    os << ',' << fmt(units::m_to_ft(r.lateral_offset)) << "\n";
  }
}

void write_route_csv(std::ostream& os, const Route& route, const FileHeader& header) {
  write_header_comment(os, header);
  os << "index,x_ft,y_ft,z_ft,station_ft,offset_ft\n";
  for (size_t i = 0; i < route.waypoints.size(); ++i) {
    const Eigen::Vector3d& p = route.waypoints[i];
    os << i << ',' << fmt(units::m_to_ft(p.x())) << ',' << fmt(units::m_to_ft(p.y()))
       << ',' << fmt(units::m_to_ft(p.z())) << ','
       << fmt(units::m_to_ft(route.stations[i])) << ','
       << fmt(units::m_to_ft(route.centerline_offset)) << "\n";
  }
}

Route load_route_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open route file: " + path);
  Route route;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!header_seen) {  // column header line
      header_seen = true;
      if (t.rfind("index,", 0) == 0) continue;
    }
    std::stringstream ss(t);
    std::string field;
    std::vector<double> vals;
    while (std::getline(ss, field, ',')) {
      try {
        vals.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw ConfigError(path + ":" + std::to_string(lineno) + ": bad number '" +
                          field + "'");
      }
    }
    if (vals.size() < 5)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected index,x_ft,y_ft,z_ft,station_ft[,offset_ft]");
    route.waypoints.emplace_back(units::ft_to_m(vals[1]), units::ft_to_m(vals[2]),
                                 units::ft_to_m(vals[3]));
    route.stations.push_back(units::ft_to_m(vals[4]));
    if (vals.size() >= 6) route.centerline_offset = units::ft_to_m(vals[5]);
  }
  if (route.waypoints.size() < 2)
    throw ConfigError(path + ": route needs at least 2 waypoints");
  for (size_t i = 1; i < route.waypoints.size(); ++i)
    route.spacing += (route.waypoints[i] - route.waypoints[i - 1]).norm();
  route.spacing /= static_cast<double>(route.waypoints.size() - 1);
  return route;
}

namespace {

nlohmann::ordered_json outcome_to_json(const RunOutcome& o) {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name(o.verdict);
  j["v_base_mph"] = o.v_base_mph;
  j["v_curve_mph"] = o.v_curve_mph;
  if (!o.safe()) {
    j["failure_time_s"] = o.failure_time;
    j["failure_station_ft"] = units::m_to_ft(o.failure_station);
  }
  j["peak_lateral_accel_mps2"] = o.peak_lateral_accel;
  j["peak_roll_deg"] = units::rad_to_deg(o.peak_roll);
  j["min_inside_normal_force_n"] = o.min_inside_normal_force;
  j["peak_lateral_offset_ft"] = units::m_to_ft(o.peak_lateral_offset);
  j["trajectory_rows"] = o.trajectory.rows.size();
  return j;
}

}  // namespace

void write_outcome_json(std::ostream& os, const RunOutcome& outcome,
                        const FileHeader& header) {
  nlohmann::ordered_json j;
  j["tool"] = std::string("curvesim ") + kVersion;
  j["schema"] = header.schema;
  j["config_hash"] = header.config_hash;
  j["outcome"] = outcome_to_json(outcome);
  os << j.dump(2) << "\n";
}

void write_report_csv(std::ostream& os, const ComparisonReport& report,
                      const FileHeader& header) {
  write_header_comment(os, header);
  os << "vehicle,condition,max_safe_mph,aashto_design_mph,observed_max_mph,"
        "sim_deviation_pct,aashto_deviation_pct\n";
  for (const ComparisonRow& r : report.rows) {
    os << r.vehicle << ',' << r.condition << ',' << fmt(r.sim_mph) << ','
       << fmt(r.aashto_mph) << ',';
    os << (r.observed_mph ? fmt(*r.observed_mph) : "") << ',';
    os << (r.sim_deviation_pct ? fmt(*r.sim_deviation_pct) : "") << ',';
    os << (r.aashto_deviation_pct ? fmt(*r.aashto_deviation_pct) : "") << "\n";
  }
}

void write_report_json(std::ostream& os, const ComparisonReport& report,
                       const FileHeader& header) {
  nlohmann::ordered_json j;
  j["tool"] = std::string("curvesim ") + kVersion;
  j["schema"] = header.schema;
  j["config_hash"] = header.config_hash;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ComparisonRow& r : report.rows) {
    nlohmann::ordered_json row;
    row["vehicle"] = r.vehicle;
    row["condition"] = r.condition;
    row["max_safe_mph"] = r.sim_mph;
    row["aashto_design_mph"] = r.aashto_mph;
    if (r.observed_mph) row["observed_max_mph"] = *r.observed_mph;
    if (r.sim_deviation_pct) row["sim_deviation_pct"] = *r.sim_deviation_pct;
    if (r.aashto_deviation_pct) row["aashto_deviation_pct"] = *r.aashto_deviation_pct;
    j["rows"].push_back(row);
  }
  os << j.dump(2) << "\n";
}

void write_deviation_csv(std::ostream& os, const ComparisonReport& report,
                         const FileHeader& header) {
  write_header_comment(os, header);
  os << "vehicle,condition,estimate,deviation_pct\n";
  for (const ComparisonRow& r : report.rows) {
    if (r.sim_deviation_pct)
      os << r.vehicle << ',' << r.condition << ",simulated," << fmt(*r.sim_deviation_pct)
         << "\n";
    if (r.aashto_deviation_pct)
      os << r.vehicle << ',' << r.condition << ",aashto," << fmt(*r.aashto_deviation_pct)
         << "\n";
  }
}

std::map<std::pair<std::string, std::string>, double> load_observed_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open observed-speeds file: " + path);
  std::map<std::pair<std::string, std::string>, double> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::stringstream ss(t);
    std::string vehicle, condition, speed;
    if (!std::getline(ss, vehicle, ',') || !std::getline(ss, condition, ',') ||
        !std::getline(ss, speed))
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'vehicle,condition,observed_max_mph'");
    vehicle = trim(vehicle);
    condition = trim(condition);
    speed = trim(speed);
    if (vehicle == "vehicle") continue;  // header row
    try {
      out[{vehicle, condition}] = std::stod(speed);
    } catch (const std::exception&) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": bad speed '" + speed +
                        "'");
    }
  }
  return out;
}

void write_search_result_json(std::ostream& os, const SpeedSearchResult& result,
                              const FileHeader& header) {
  nlohmann::ordered_json j;
  j["tool"] = std::string("curvesim ") + kVersion;
  j["schema"] = "search_result.v1";
  j["config_hash"] = header.config_hash;
  j["vehicle"] = result.vehicle;
  j["condition"] = result.condition;
  j["max_safe_mph"] = result.max_safe_mph;
  j["increment_mph"] = result.increment_mph;
  j["aashto_design_mph"] = result.aashto_mph;
  j["capped"] = result.capped;
  j["monotone"] = result.monotone;
  if (!result.capped) {
    j["first_unsafe_mph"] = result.first_unsafe_mph;
    j["first_unsafe_verdict"] = verdict_name(result.first_unsafe_verdict);
  }
  if (result.observed_mph) j["observed_max_mph"] = *result.observed_mph;
  j["boundary_safe_outcome"] = outcome_to_json(result.boundary_safe);
  if (!result.capped) j["boundary_unsafe_outcome"] = outcome_to_json(result.boundary_unsafe);
  os << j.dump(2) << "\n";
}

void write_manifest_json(std::ostream& os, const std::vector<ManifestEntry>& cells,
                         bool complete, const FileHeader& header) {
  nlohmann::ordered_json j;
  j["tool"] = std::string("curvesim ") + kVersion;
  j["schema"] = "manifest.v1";
  j["config_hash"] = header.config_hash;
  j["complete"] = complete;
  j["cells"] = nlohmann::ordered_json::array();
  for (const ManifestEntry& c : cells) {
    nlohmann::ordered_json cell;
    cell["vehicle"] = c.vehicle;
    cell["condition"] = c.condition;
    cell["completed"] = c.completed;
    j["cells"].push_back(cell);
  }
  os << j.dump(2) << "\n";
}

}  // namespace curvesim
