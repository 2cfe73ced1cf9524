#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace expoly {

/// Exact Gaussian rational re + im*i.
///
/// Both parts are GMP rationals kept in lowest terms with a positive
/// denominator, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long value) : re_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  /// p/q with q != 0.
  static Scalar rational(long long p, long long q);
  static Scalar gaussian(long long re, long long im) { return Scalar(mpq_class(static_cast<long>(re)), mpq_class(static_cast<long>(im))); }
  static Scalar i() { return Scalar(0, 1); }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error for zero.
  Scalar inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Scalar pow(std::int64_t exponent) const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Canonical text: `3`, `-1/2`, `2i`, `(1-3/4i)`.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Total order used for canonical forms: lexicographic on
/// (re numerator, re denominator, im numerator, im denominator).
int compare(const Scalar& a, const Scalar& b);

/// Canonical `p/q` (or `p` when q == 1) rendering of a rational.
std::string rational_to_string(const mpq_class& q);
/// Accepts `p` or `p/q` with optional sign; throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace expoly
