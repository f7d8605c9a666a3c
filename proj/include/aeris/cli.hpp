#pragma once

#include <string>

#include "aeris/scenario.hpp"

namespace aeris::cli {

inline constexpr const char* kVersion = "aeris-1.0.0";

// Exit codes shared by the binary and the in-process test harness.
inline constexpr int kOk = 0;
inline constexpr int kSchemaError = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kToleranceBreach = 4;
inline constexpr int kNumericalFailure = 5;

// Executes one command (metrics | simulate | optimize | select | validate)
// against an already-loaded scenario, writing <command>.csv and
// <command>.json into out_dir. Returns an exit code; never throws.
int run_command(const std::string& command, Scenario scenario,
                const std::string& out_dir);

// Full CLI entry point (argument parsing + overrides).
int run(int argc, const char* const* argv);

}  // namespace aeris::cli
