#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsc {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "QSCHUB_CACHE_DIR";

/// Command-line entry point.  Subcommands: product, qproduct, gw, giambelli,
/// qgiambelli, basis, verify.  Returns 0 on success, 2 on input errors,
/// 1 on internal assertion failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsc
