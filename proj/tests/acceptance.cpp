// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance <path-to-expoly> [seed]

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "expoly/selftest.hpp"

namespace {

// Wall-clock limits in seconds; criteria without an entry are unbounded.
const std::map<int, double> kLimits = {{1, 10.0}, {2, 30.0}, {3, 30.0}, {5, 60.0}};

bool capture(const std::string& command, std::string& out) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return false;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  return pclose(pipe.release()) == 0;
}

void report(int id, const std::string& name, bool passed, double seconds, const std::string& note) {
  std::printf("%s  C%d  %-48s %7.2fs%s%s\n", passed ? "PASS" : "FAIL", id, name.c_str(), seconds,
              note.empty() ? "" : "  ", note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-expoly> [seed]\n";
    return 2;
  }
  const std::string tool = argv[1];
  const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 0;
  bool all = true;

  for (int id = 1; id < expoly::kCriterionCount; ++id) {
    const auto r = expoly::run_criterion(id, seed);
    std::string note;
    bool passed = r.passed;
    if (auto it = kLimits.find(id); it != kLimits.end() && r.seconds > it->second) {
      passed = false;
      note = "over the " + std::to_string(static_cast<int>(it->second)) + "s limit";
    }
    if (!r.passed) note = r.detail.dump();
    report(id, r.name, passed, r.seconds, note);
    all = all && passed;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string command = "\"" + tool + "\" selftest --seed 0 --json";
  std::string first;
  std::string second;
  const bool ran = capture(command, first) && capture(command, second);
  const bool identical = ran && !first.empty() && first == second;
  const auto in_process = expoly::run_criterion(expoly::kCriterionCount, seed);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string note;
  if (!ran) note = "selftest run failed";
  else if (!identical) note = "selftest output differs between runs";
  else if (!in_process.passed) note = in_process.detail.dump();
  const bool c8 = identical && in_process.passed;
  report(expoly::kCriterionCount, in_process.name, c8, seconds, note);
  all = all && c8;

  std::printf("%s\n", all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return all ? 0 : 1;
}
