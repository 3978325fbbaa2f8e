#pragma once

namespace curvesim {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kTrajectorySchema = "trajectory.v1";
inline constexpr const char* kReportSchema = "report.v1";
inline constexpr const char* kOutcomeSchema = "outcome.v1";
inline constexpr const char* kRouteSchema = "route.v1";

}  // namespace curvesim
