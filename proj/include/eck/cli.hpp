#pragma once

#include <ostream>

namespace eck::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eck::cli
