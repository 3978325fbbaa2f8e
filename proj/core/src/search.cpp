#include "curvesim/search.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "curvesim/errors.hpp"

namespace curvesim {

namespace {
constexpr double kBaseSpeedExcessMph = 5.0;  // v_base = v_curve + 5 mph
}

void SearchParams::validate() const {
  if (start_mph <= 0) throw ConfigError("search: start_mph must be positive");
  if (increment_mph <= 0) throw ConfigError("search: increment_mph must be positive");
  if (max_mph <= start_mph) throw ConfigError("search: max_mph must exceed start_mph");
  if (refine && refine_increment_mph <= 0)
    throw ConfigError("search: refine_increment_mph must be positive");
}

SpeedSearchResult find_max_safe_speed(const Simulation& sim, const SearchParams& params,
                                      const std::string& vehicle_name,
                                      const std::string& condition_name) {
  params.validate();

  auto run_at = [&](double v_curve) {
    return sim.run(v_curve + kBaseSpeedExcessMph, v_curve);
  };

  SpeedSearchResult result;
  result.vehicle = vehicle_name;
  result.condition = condition_name;
  result.increment_mph = params.increment_mph;

  RunOutcome out = run_at(params.start_mph);
  if (!out.safe()) {
    std::ostringstream os;
    os << "search: start speed " << params.start_mph << " mph is already unsafe for "
       << vehicle_name << "/" << condition_name << " (verdict "
       << verdict_name(out.verdict) << " at station " << out.failure_station
       << " m, t=" << out.failure_time << " s)";
    throw SimulationFault(os.str());
  }

  double safe_mph = params.start_mph;
  RunOutcome safe_out = std::move(out);
  bool found_unsafe = false;

  for (double v = params.start_mph + params.increment_mph; v <= params.max_mph + 1e-9;
       v += params.increment_mph) {
    RunOutcome cand = run_at(v);
    if (cand.safe()) {
      safe_mph = v;
      safe_out = std::move(cand);
      continue;
    }
    found_unsafe = true;
    result.first_unsafe_mph = v;
    result.first_unsafe_verdict = cand.verdict;
    result.boundary_unsafe = std::move(cand);
    break;
  }

  result.capped = !found_unsafe;
  result.max_safe_mph = safe_mph;
  result.boundary_safe = std::move(safe_out);

  if (found_unsafe && params.refine &&
      params.refine_increment_mph < params.increment_mph) {
    // Finer pass across the coarse boundary. A non-monotone safe/unsafe
    // pattern is reported verbatim, never bisected away.
    double last_safe = result.max_safe_mph;
    const double coarse_unsafe = result.first_unsafe_mph;
    bool seen_unsafe = false;
    bool non_monotone = false;
    for (double v = result.max_safe_mph + params.refine_increment_mph;
         v < coarse_unsafe - 1e-9; v += params.refine_increment_mph) {
      RunOutcome cand = run_at(v);
      if (cand.safe()) {
        if (seen_unsafe) {
          non_monotone = true;  // safe again after an unsafe speed
        } else {
          last_safe = v;
          result.boundary_safe = std::move(cand);
        }
      } else if (!seen_unsafe) {
        seen_unsafe = true;
        result.first_unsafe_mph = v;
        result.first_unsafe_verdict = cand.verdict;
        result.boundary_unsafe = std::move(cand);
      }
    }
    result.max_safe_mph = last_safe;
    result.monotone = !non_monotone;
    if (non_monotone) {
      std::cerr << "warning: non-monotone safe/unsafe pattern for " << vehicle_name
                << "/" << condition_name << " between " << result.max_safe_mph
                << " and " << coarse_unsafe
                << " mph; reporting the first boundary verbatim\n";
    }
    result.increment_mph = params.refine_increment_mph;
  }
  return result;
}

ComparisonReport compare_report(const std::vector<SpeedSearchResult>& results) {
  ComparisonReport report;
  for (const SpeedSearchResult& r : results) {
    ComparisonRow row;
    row.vehicle = r.vehicle;
    row.condition = r.condition;
    row.sim_mph = r.max_safe_mph;
    row.aashto_mph = r.aashto_mph;
    row.observed_mph = r.observed_mph;
    if (r.observed_mph && *r.observed_mph > 0) {
      row.sim_deviation_pct = (r.max_safe_mph - *r.observed_mph) / *r.observed_mph * 100.0;
      row.aashto_deviation_pct = (r.aashto_mph - *r.observed_mph) / *r.observed_mph * 100.0;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace curvesim
