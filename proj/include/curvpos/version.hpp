#pragma once

namespace curvpos {
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "curvpos-report/1";
}  // namespace curvpos
