#pragma once

#define FRACWELL_VERSION_MAJOR 0
#define FRACWELL_VERSION_MINOR 1
#define FRACWELL_VERSION_PATCH 0

namespace fracwell {

inline constexpr const char* version_string = "0.1.0";

} // namespace fracwell
