#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "expoly/scalar.hpp"

namespace expoly {

/// Univariate polynomial over Q(i), coefficients from the constant term up.
/// The leading coefficient is never zero (the zero polynomial is empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);

  /// (z - root)
  static UniPoly linear(const Scalar& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar evaluate(const Scalar& z) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Text in the variable `z`, highest power first.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws std::domain_error for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Square-free factorization p = lc * prod_i s_i^i (Yun); result[i-1] = s_i,
/// each monic and square-free.
std::vector<UniPoly> squarefree_factors(const UniPoly& p);

/// Approximate complex roots of a polynomial with simple roots (Aberth iteration).
std::vector<std::complex<double>> approximate_roots(const UniPoly& p);

/// Best rational approximation p/q of x with q <= max_den (Stern-Brocot / continued fractions).
mpq_class rationalize(double x, long max_den);

/// Roots in Q(i) found by rounding numerical roots and confirming each one by
/// exact evaluation. `remainder` is p divided by the confirmed linear factors.
struct GaussianRoots {
  std::vector<Scalar> roots;
  UniPoly remainder;
};
GaussianRoots gaussian_rational_roots(const UniPoly& squarefree);

}  // namespace expoly
