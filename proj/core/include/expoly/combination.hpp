#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "expoly/exppoly.hpp"

namespace expoly {

struct Combination {
  std::vector<Scalar> coeffs;
  ExpPoly combined;
  /// Coefficient bound B in effect when the draw succeeded.
  std::int64_t bound = 0;
  int attempts = 0;
};

/// Draws c_j from {-B..B}\{0} (B = 2, doubled after every failed draw) until
/// f0 = sum c_j f_j keeps, for each exponential in the union of the spectra,
/// the largest degree that any f_j attains on that exponential. In particular
/// sp(f0) is the union of the sp(f_j).
///
/// Throws PreconditionViolation for an empty or all-zero list.
Combination generic_combination(std::span<const ExpPoly> fs, std::uint64_t seed);

/// True iff `combined` meets the generic-position condition relative to `fs`.
bool is_generic_combination(std::span<const ExpPoly> fs, const ExpPoly& combined);

}  // namespace expoly
