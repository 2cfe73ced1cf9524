#pragma once

#include <cstdint>
#include <random>

namespace expoly {

/// Seeded generator with platform-independent draws.
///
/// std::mt19937_64's output sequence is fixed by the standard; the integer
/// mapping is done here rather than through std::uniform_int_distribution,
/// whose algorithm is implementation-defined. Reports therefore replay
/// byte-for-byte from the seed on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant at these ranges).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// Integer in [-bound, bound] \ {0}.
  std::int64_t nonzero(std::int64_t bound) {
    const std::int64_t v = uniform(1, bound);
    return (engine_() & 1U) ? v : -v;
  }

  bool coin() { return (engine_() & 1U) != 0; }

  /// Real in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace expoly
