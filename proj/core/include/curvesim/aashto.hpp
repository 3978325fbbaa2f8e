#pragma once

#include <string>
#include <utility>
#include <vector>

namespace curvesim {

// Maximum side friction factor vs design speed. Imperial units end to end:
// speeds mph, radius ft, v = sqrt(15 R (e + f)).
struct AashtoFrictionTable {
  std::vector<std::pair<double, double>> rows;  // (design speed mph, f_max)

  static AashtoFrictionTable green_book_default();
  static AashtoFrictionTable load_csv(const std::string& path);

  double f_max(double speed_mph) const;  // linear interpolation, clamped ends
  void validate() const;
};

struct AashtoResult {
  double design_speed_mph = 0;
  double rounded_down_5_mph = 0;
  int iterations = 0;
};

// Fixed-point solve of v = sqrt(15 R (e + f_max(v))), |dv| < 0.01 mph.
AashtoResult aashto_design_speed(double radius_ft, double superelevation,
                                 const AashtoFrictionTable& table);

}  // namespace curvesim
