#pragma once

#include <ostream>

#include "config.hpp"

namespace gnsym::cli {

namespace exit_code {
inline constexpr int kStrong = 0;
inline constexpr int kInconsistent = 1;  // dyadic/verify mismatch or runtime failure
inline constexpr int kConfig = 2;
inline constexpr int kWeakTypeOnly = 3;
inline constexpr int kFails = 4;
inline constexpr int kOutOfScope = 5;
}  // namespace exit_code

int exit_for(Status s);

int cmd_check(const RunConfig& cfg, std::ostream& out);
int cmd_region(const RunConfig& cfg, std::ostream& out);
int cmd_dyadic(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_scan(const RunConfig& cfg, std::ostream& out);

// Full command line: subcommands check, region, dyadic, verify, scan plus the global flags
// --config, --out, --seed, --tolerance, --jobs.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gnsym::cli
