#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "expoly/scalar.hpp"

namespace expoly {

/// Exponent multi-index of a monomial t_1^{a_1} ... t_d^{a_d}.
using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Integer affine change of variables x = A*y + c, with x in Z^out and y in Z^in.
///
/// `matrix` has `offset.size()` rows and `in_dim` columns. Pulling a function
/// back along the map yields y -> f(A*y + c).
struct AffineMap {
  std::size_t in_dim = 0;
  std::vector<std::vector<std::int64_t>> matrix;
  std::vector<std::int64_t> offset;

  std::size_t out_dim() const noexcept { return offset.size(); }

  static AffineMap translation(std::span<const std::int64_t> h);
};

/// Sparse polynomial in t_1..t_d with exact Gaussian-rational coefficients.
/// No zero coefficient is ever stored.
class GenPoly {
 public:
  explicit GenPoly(std::size_t d = 1) : dim_(d) {}

  static GenPoly constant(std::size_t d, const Scalar& c);
  /// The coordinate function t_{j+1} (0-based j).
  static GenPoly variable(std::size_t d, std::size_t j);
  static GenPoly monomial(Exponents exps, const Scalar& c);

  std::size_t dim() const noexcept { return dim_; }
  const std::map<Exponents, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree, -1 for the zero polynomial.
  int degree() const noexcept;
  /// Coefficient of a monomial (zero if absent).
  Scalar coefficient(const Exponents& e) const;

  /// Adds c*t^e, dropping the entry if it cancels.
  void add_term(const Exponents& e, const Scalar& c);

  /// Sum of the monomials of total degree exactly k.
  GenPoly homogeneous_part(int k) const;

  Scalar evaluate(std::span<const std::int64_t> x) const;

  GenPoly pow(unsigned k) const;
  GenPoly scaled(const Scalar& c) const;

  GenPoly& operator+=(const GenPoly& other);
  GenPoly& operator-=(const GenPoly& other);
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  GenPoly operator-() const { return scaled(Scalar(-1)); }

  friend bool operator==(const GenPoly& a, const GenPoly& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  /// Canonical text in t1..td, e.g. `t1^2 - 3/2*t1*t2 + 1`; `0` for zero.
  std::string to_string() const;
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  std::size_t dim_;
  std::map<Exponents, Scalar> terms_;
};

/// Substitutes t_j -> images[j] (each image over the same target dimension).
GenPoly substitute(const GenPoly& p, std::span<const GenPoly> images, std::size_t target_dim);

/// y -> p(A*y + c).
GenPoly pullback(const GenPoly& p, const AffineMap& map);

/// Monomials in canonical print order: descending total degree, then
/// descending lexicographic exponents.
std::vector<std::pair<Exponents, Scalar>> ordered_terms(const GenPoly& p);

}  // namespace expoly
