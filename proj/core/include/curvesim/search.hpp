#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvesim/sim.hpp"

namespace curvesim {

struct SearchParams {
  double start_mph = 10.0;      // must be safe
  double increment_mph = 1.0;
  double max_mph = 120.0;       // search cap; hitting it sets capped = true
  bool refine = false;          // optional finer pass around the boundary
  double refine_increment_mph = 0.25;

  void validate() const;
};

struct SpeedSearchResult {
  std::string vehicle;
  std::string condition;
  double max_safe_mph = 0;
  double increment_mph = 0;  // effective increment at the reported boundary
  double first_unsafe_mph = 0;
  Verdict first_unsafe_verdict = Verdict::safe;
  bool capped = false;     // never failed below the search cap
  bool monotone = true;    // refinement saw a clean safe->unsafe boundary
  double aashto_mph = 0;   // filled by the sweep
  std::optional<double> observed_mph;
  RunOutcome boundary_safe;    // run at max_safe_mph
  RunOutcome boundary_unsafe;  // run at first_unsafe_mph (when not capped)
};

// Incremental upward search with v_base = v_curve + 5 mph. Throws
// SimulationFault when the start speed is already unsafe.
SpeedSearchResult find_max_safe_speed(const Simulation& sim, const SearchParams& params,
                                      const std::string& vehicle_name,
                                      const std::string& condition_name);

struct ComparisonRow {
  std::string vehicle;
  std::string condition;
  double sim_mph = 0;
  double aashto_mph = 0;
  std::optional<double> observed_mph;
  std::optional<double> sim_deviation_pct;     // (sim - observed)/observed * 100
  std::optional<double> aashto_deviation_pct;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
};

ComparisonReport compare_report(const std::vector<SpeedSearchResult>& results);

}  // namespace curvesim
