#include "expoly/combination.hpp"

#include <map>

#include "expoly/errors.hpp"
#include "expoly/rng.hpp"

namespace expoly {

namespace {

std::map<Exponential, int, ExponentialLess> top_degrees(std::span<const ExpPoly> fs) {
  std::map<Exponential, int, ExponentialLess> top;
  for (const auto& f : fs) {
    for (const auto& t : f.terms()) {
      auto [it, inserted] = top.try_emplace(t.exp, t.poly.degree());
      if (!inserted) it->second = std::max(it->second, t.poly.degree());
    }
  }
  return top;
}

}  // namespace

bool is_generic_combination(std::span<const ExpPoly> fs, const ExpPoly& combined) {
  const auto top = top_degrees(fs);
  if (combined.terms().size() != top.size()) return false;
  for (const auto& t : combined.terms()) {
    auto it = top.find(t.exp);
    if (it == top.end() || it->second != t.poly.degree()) return false;
  }
  return true;
}

Combination generic_combination(std::span<const ExpPoly> fs, std::uint64_t seed) {
  if (fs.empty()) throw PreconditionViolation("generic_combination needs at least one function");
  const std::size_t d = fs.front().dim();
  bool any_nonzero = false;
  for (const auto& f : fs) {
    if (f.dim() != d) throw DimensionMismatch(d, f.dim());
    any_nonzero = any_nonzero || !f.is_zero();
  }
  if (!any_nonzero) throw PreconditionViolation("generic_combination of all-zero functions");

  if (fs.size() == 1) return Combination{{Scalar(1)}, fs.front(), 1, 1};

  Rng rng(seed);
  std::int64_t bound = 2;
  for (int attempt = 1;; ++attempt) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(fs.size());
    ExpPoly combined(d);
    for (const auto& f : fs) {
      coeffs.emplace_back(rng.nonzero(bound));
      combined = combined + f.scaled(coeffs.back());
    }
    if (is_generic_combination(fs, combined)) return Combination{std::move(coeffs), std::move(combined), bound, attempt};
    // Failure sets are finitely many proper subspaces; widening the range
    // makes each further draw succeed with ever higher probability.
    if (bound < (std::int64_t{1} << 40)) bound *= 2;
  }
}

}  // namespace expoly
