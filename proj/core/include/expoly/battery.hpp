#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "expoly/exppoly.hpp"
#include "expoly/rng.hpp"

namespace expoly {

/// Shape of randomly drawn exponential polynomials.
struct BatterySpec {
  std::size_t d = 1;
  std::size_t max_terms = 3;
  unsigned max_degree = 3;
  /// Real rational lambdas only (otherwise small Gaussian rationals may occur).
  bool real_spectrum = false;
};

Scalar random_coefficient(Rng& rng);
GenPoly random_genpoly(Rng& rng, std::size_t d, unsigned max_degree);
/// Nonzero polynomial of total degree exactly `degree`.
GenPoly random_genpoly_of_degree(Rng& rng, std::size_t d, unsigned degree);
Exponential random_exponential(Rng& rng, std::size_t d, bool real_spectrum);
/// Nonzero; 1 to max_terms distinct exponentials.
ExpPoly random_exppoly(Rng& rng, const BatterySpec& spec);
/// Step from the pool {+-e_j, e_j + e_k}.
GroupElem random_step(Rng& rng, std::size_t d);

/// `count` functions alternating d = 1 and d = 2 (or fixed d when `spec.d` is
/// used with `alternate = false`).
std::vector<ExpPoly> make_battery(std::uint64_t seed, std::size_t count, BatterySpec spec, bool alternate_dims);

/// q_N = t_1^2 + ... + t_N^2 on Z^N.
ExpPoly sum_of_squares(std::size_t N);

}  // namespace expoly
