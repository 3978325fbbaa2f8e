#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvesim/road.hpp"
#include "curvesim/search.hpp"
#include "curvesim/sim.hpp"
#include "curvesim/trajectory.hpp"

namespace curvesim {

// Common first lines of every output file: tool version, config hash, units.
struct FileHeader {
  std::string config_hash;
  std::string schema;
};

void write_header_comment(std::ostream& os, const FileHeader& header);

void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log,
                          const FileHeader& header);

void write_route_csv(std::ostream& os, const Route& route, const FileHeader& header);
Route load_route_csv(const std::string& path);

void write_outcome_json(std::ostream& os, const RunOutcome& outcome,
                        const FileHeader& header);

void write_report_csv(std::ostream& os, const ComparisonReport& report,
                      const FileHeader& header);
void write_report_json(std::ostream& os, const ComparisonReport& report,
                       const FileHeader& header);

// Plot-ready deviation bars: one row per (vehicle, condition) with the
// percentage deviations of both estimates from the observed speed.
void write_deviation_csv(std::ostream& os, const ComparisonReport& report,
                         const FileHeader& header);

// observed speeds CSV: vehicle, condition, observed_max_mph
std::map<std::pair<std::string, std::string>, double> load_observed_csv(
    const std::string& path);

struct ManifestEntry {
  std::string vehicle;
  std::string condition;
  bool completed = false;
};

void write_manifest_json(std::ostream& os, const std::vector<ManifestEntry>& cells,
                         bool complete, const FileHeader& header);

// Full per-cell search summary (boundary runs included by reference counts).
void write_search_result_json(std::ostream& os, const SpeedSearchResult& result,
                              const FileHeader& header);

}  // namespace curvesim
