#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "expoly/exppoly.hpp"
#include "expoly/linalg.hpp"
#include "expoly/multi.hpp"
#include "expoly/unipoly.hpp"

namespace expoly {

/// Axis-aligned window lo <= x <= hi in Z^d, enumerated row-major
/// (last coordinate fastest).
class GridBox {
 public:
  GridBox(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi);
  /// {lo..hi}^d
  static GridBox cube(std::size_t d, std::int64_t lo, std::int64_t hi);

  std::size_t dim() const noexcept { return lo_.size(); }
  const std::vector<std::int64_t>& lo() const noexcept { return lo_; }
  const std::vector<std::int64_t>& hi() const noexcept { return hi_; }
  std::size_t volume() const noexcept;
  std::vector<GroupElem> points() const;

  /// `0..3` or `0..2,-1..1`
  std::string to_string() const;
  friend bool operator==(const GridBox&, const GridBox&) = default;

 private:
  std::vector<std::int64_t> lo_;
  std::vector<std::int64_t> hi_;
};

struct GridFunction {
  GridBox box;
  std::vector<Scalar> values;  // enumeration order of box
};

GridFunction sample(const ExpPoly& f, const GridBox& box);

/// Rank of M[x][y] = f(x + y), x, y in box; a lower bound for the order of
/// any decomposition of f(x_1 + x_2), reaching dim V_f on large enough boxes.
RankCertificate sum_rank(const ExpPoly& f, const GridBox& box);

/// Rank of M[a][b] = F(a, b) for a two-variable function sampled on box x box.
RankCertificate bivariate_rank(const MultiExpPoly& F, const GridBox& box);

struct RefutationEntry {
  VarSet E1;
  VarSet E2;
  std::size_t j = 0;  // 0-based separated pair
  std::size_t k = 0;
  std::size_t rank = 0;
};

/// Outcome of the order-2 refutation: `refuted` iff every pair of splits
/// forces a restricted two-variable function of rank > 2.
struct Order2Refutation {
  bool refuted = false;
  std::vector<RefutationEntry> entries;
};

/// Throws PreconditionViolation for n < 3.
Order2Refutation refute_order2(const ExpPoly& f, std::size_t n, const GridBox& box);

/// Candidates whose samples lie in the exact span of the basis vectors.
std::vector<Exponential> exponentials_in_span(const std::vector<GridFunction>& basis,
                                              const std::vector<Exponential>& candidates, const GridBox& box);

struct HeuristicResult {
  bool attempted = false;
  /// Smallest k <= k_max for which a numerical decomposition fit the tiny box.
  std::optional<std::size_t> feasible_order;
  double best_residual = 0.0;
  GridBox box{{0}, {0}};
  std::string note;
};

struct OrderBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string lower_route;
  std::string upper_route;
  std::optional<RankCertificate> rank_certificate;
  std::optional<Order2Refutation> refutation;
  HeuristicResult heuristic;
  std::vector<std::string> flags;  // EXACT when lower == upper, OPEN otherwise; HEURISTIC if that path ran

  bool exact() const noexcept { return lower == upper; }
};

/// Numerical search on a tiny window (volume <= 4) for the smallest k in
/// [k_min, k_max] at which f(x_1 + ... + x_n) sampled there is a sum of k split
/// products: exhaustive over multisets of variable splits, alternating least
/// squares, 20 restarts, relative residual 1e-9. Output is advisory only.
HeuristicResult heuristic_order_search(const ExpPoly& f, std::size_t n, std::size_t k_min, std::size_t k_max,
                                       std::uint64_t seed);

/// Certified lower/upper bounds on the minimal decomposition order of
/// f(x_1 + ... + x_n). Throws PreconditionViolation for n < 2 or k_max > 6.
OrderBounds min_order_bounds(const ExpPoly& f, std::size_t n, const GridBox& box, std::size_t k_max,
                             std::uint64_t seed = 0);

/// Default analysis window for f: {0..deg f + 1}^d (at least {0..1}).
GridBox default_box(const ExpPoly& f);

class ReconstructionError : public std::runtime_error {
 public:
  enum class Kind { window_too_small, spectrum_outside_field, verification_failed, bad_input };
  ReconstructionError(Kind kind, const std::string& message, std::string factor = {})
      : std::runtime_error(message), kind_(kind), factor_(std::move(factor)) {}

  Kind kind() const noexcept { return kind_; }
  /// For spectrum_outside_field: the unresolved factor of the characteristic polynomial.
  const std::string& factor() const noexcept { return factor_; }

 private:
  Kind kind_;
  std::string factor_;
};

struct Reconstruction {
  ExpPoly f{1};
  std::size_t order = 0;  // minimal recurrence order = Hankel rank
  UniPoly characteristic;
  std::vector<std::pair<Scalar, std::size_t>> roots;  // root, multiplicity
};

/// Minimal monic recurrence satisfied by the samples (stable on {0..L/2} and
/// {0..L}), roots of its characteristic polynomial in Q(i), and the exact
/// coefficients of sum_j p_j(x) lambda_j^x; all samples are re-checked.
Reconstruction reconstruct_gep(const GridFunction& g);

/// Smallest r such that g(i + r) is a fixed combination of g(i..i+r-1) for all
/// i in the window, with r <= (len)/2; nullopt if none. Coefficients c satisfy
/// g(i+r) = sum_j c[j] g(i+j).
struct Recurrence {
  std::size_t order = 0;
  std::vector<Scalar> coeffs;
};
std::optional<Recurrence> minimal_recurrence(const std::vector<Scalar>& seq);

}  // namespace expoly
