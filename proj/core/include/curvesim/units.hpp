#pragma once

// Unit conversions. All internal state is SI; config files and reports use
// the imperial units conventional in US roadway design (ft, in, mph, lb).
// Conversion factors are the exact legal definitions.

namespace curvesim::units {

inline constexpr double kMetersPerFoot = 0.3048;
inline constexpr double kMetersPerInch = 0.0254;
inline constexpr double kMetersPerSecondPerMph = 0.44704;
inline constexpr double kKilogramsPerPound = 0.45359237;
inline constexpr double kNewtonMetersPerPoundFoot = 1.3558179483314004;
inline constexpr double kNewtonsPerPoundForce = 4.4482216152605;
inline constexpr double kGravity = 9.80665;  // m/s^2
inline constexpr double kPi = 3.14159265358979323846;

constexpr double ft_to_m(double ft) { return ft * kMetersPerFoot; }
constexpr double m_to_ft(double m) { return m / kMetersPerFoot; }
constexpr double in_to_m(double in) { return in * kMetersPerInch; }
constexpr double m_to_in(double m) { return m / kMetersPerInch; }
constexpr double mph_to_mps(double mph) { return mph * kMetersPerSecondPerMph; }
constexpr double mps_to_mph(double mps) { return mps / kMetersPerSecondPerMph; }
constexpr double lb_to_kg(double lb) { return lb * kKilogramsPerPound; }
constexpr double kg_to_lb(double kg) { return kg / kKilogramsPerPound; }
constexpr double lbft_to_nm(double lbft) { return lbft * kNewtonMetersPerPoundFoot; }
constexpr double nm_to_lbft(double nm) { return nm / kNewtonMetersPerPoundFoot; }
constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }
constexpr double rpm_to_radps(double rpm) { return rpm * 2.0 * kPi / 60.0; }
constexpr double radps_to_rpm(double radps) { return radps * 60.0 / (2.0 * kPi); }
constexpr double lbf_per_in_to_n_per_m(double v) {
  return v * kNewtonsPerPoundForce / kMetersPerInch;
}
constexpr double lbft2_to_kgm2(double v) {
  return v * kKilogramsPerPound * kMetersPerFoot * kMetersPerFoot;
}

}  // namespace curvesim::units
