#include "curvesim/aashto.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "curvesim/errors.hpp"

namespace curvesim {

AashtoFrictionTable AashtoFrictionTable::green_book_default() {
  AashtoFrictionTable t;
  t.rows = {{15, 0.32}, {20, 0.27}, {25, 0.23}, {30, 0.20}, {35, 0.18},
            {40, 0.16}, {45, 0.15}, {50, 0.14}, {55, 0.13}, {60, 0.12},
            {65, 0.11}, {70, 0.10}, {75, 0.09}, {80, 0.08}};
  return t;
}

AashtoFrictionTable AashtoFrictionTable::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open friction table: " + path);
  AashtoFrictionTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b)) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'speed_mph,f_max'");
    }
    if (a.find_first_of("0123456789") == std::string::npos) continue;  // header
    try {
      t.rows.emplace_back(std::stod(a), std::stod(b));
    } catch (const std::exception&) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": bad number");
    }
  }
  t.validate();
  return t;
}

void AashtoFrictionTable::validate() const {
  if (rows.size() < 2) throw ConfigError("friction table: need at least 2 rows");
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].second <= 0) throw ConfigError("friction table: f_max must be positive");
    if (i > 0) {
      if (rows[i].first <= rows[i - 1].first)
        throw ConfigError("friction table: speeds must be increasing");
      if (rows[i].second > rows[i - 1].second)
        throw ConfigError("friction table: f_max must be non-increasing");
    }
  }
}

double AashtoFrictionTable::f_max(double v) const {
  if (v <= rows.front().first) return rows.front().second;
  if (v >= rows.back().first) return rows.back().second;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (v <= rows[i].first) {
      const double t = (v - rows[i - 1].first) / (rows[i].first - rows[i - 1].first);
      return rows[i - 1].second + t * (rows[i].second - rows[i - 1].second);
    }
  }
  return rows.back().second;
}

AashtoResult aashto_design_speed(double radius_ft, double superelevation,
                                 const AashtoFrictionTable& table) {
  if (radius_ft <= 0) throw ConfigError("aashto: radius must be positive");
  if (superelevation < 0 || superelevation >= 0.12)
    throw ConfigError("aashto: superelevation must be in [0, 0.12)");
  table.validate();

  AashtoResult out;
  double v = 30.0;
  for (int i = 0; i < 100; ++i) {
    const double next = std::sqrt(15.0 * radius_ft * (superelevation + table.f_max(v)));
    out.iterations = i + 1;
    if (std::abs(next - v) < 0.01) {
      out.design_speed_mph = next;
      out.rounded_down_5_mph = 5.0 * std::floor(next / 5.0);
      return out;
    }
    v = next;
  }
  throw SimulationFault("aashto: fixed point did not converge in 100 iterations "
                        "(malformed friction table?)");
}

}  // namespace curvesim
