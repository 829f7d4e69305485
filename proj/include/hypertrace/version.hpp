#pragma once

namespace hypertrace {

inline constexpr const char* hypertrace_version = "0.1.0";

}  // namespace hypertrace
