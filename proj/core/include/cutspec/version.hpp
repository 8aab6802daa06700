#pragma once

namespace cutspec {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "cutspec/1";

} // namespace cutspec
