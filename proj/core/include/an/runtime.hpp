#pragma once

#include <string_view>

namespace an {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Worker count resolution: explicit request > AN_WORKERS environment
/// variable > hardware concurrency.
int resolve_workers(int requested);

}  // namespace an
