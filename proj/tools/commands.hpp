#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expoly/serialize.hpp"

namespace expoly::cli {

inline const std::vector<std::string> kCommands = {"degree", "spectrum", "delta",   "mdelta", "annihilate", "decompose",
                                                   "verify", "rank",     "bounds",  "refute2", "reconstruct", "selftest"};

struct RunOptions {
  std::optional<std::string> expr;
  std::optional<std::string> csv;      // path
  std::optional<std::string> witness;  // path
  std::optional<std::string> box;
  std::optional<std::string> lambda;   // mdelta modifier, "2" or "2,1/3"
  std::vector<std::string> steps;      // "1" or "1,-1"
  std::optional<std::size_t> n;
  std::optional<std::size_t> dim;
  std::size_t kmax = 4;
  unsigned power = 1;
  std::uint64_t seed = 0;
  bool verify = false;
};

/// Outcome of one invocation. `to_json` is byte-deterministic for fixed
/// arguments and input; wall time is kept out of it.
struct RunReport {
  std::string command;
  std::vector<std::string> args;
  std::uint64_t seed = 0;
  std::string input_digest;
  Json result;
  std::vector<std::string> flags;
  std::string error;
  std::string text;  // human-readable summary
  int exit_code = 0;
  double seconds = 0.0;

  Json to_json() const;
};

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kModuleError = 3 };

RunReport run(const std::string& command, const RunOptions& options, std::vector<std::string> args = {});

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace expoly::cli
