#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "expoly/exponential.hpp"
#include "expoly/genpoly.hpp"

namespace expoly {

struct ExpTerm {
  Exponential exp;
  GenPoly poly;

  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

/// A term whose exponential has not been validated yet (e.g. straight from a parser).
struct RawTerm {
  std::vector<Scalar> lambda;
  GenPoly poly;
};

/// Generalized exponential polynomial sum_i p_i * m_i on Z^d in canonical form:
/// exponentials pairwise distinct and sorted, every p_i nonzero.
///
/// Values are immutable once built; all arithmetic returns new canonical values,
/// so structural equality coincides with equality of functions.
class ExpPoly {
 public:
  /// The zero function on Z^d.
  explicit ExpPoly(std::size_t d = 1) : dim_(d) {}

  /// Merges duplicate exponentials, drops zero polynomials and sorts.
  static ExpPoly canonicalize(std::size_t d, std::vector<ExpTerm> raw);
  /// Same, validating exponentials first (throws MalformedInput on a zero component).
  static ExpPoly canonicalize(std::size_t d, std::vector<RawTerm> raw);

  static ExpPoly from_poly(const GenPoly& p);
  static ExpPoly from_exponential(const Exponential& m, const Scalar& c = Scalar(1));
  static ExpPoly constant(std::size_t d, const Scalar& c);
  static ExpPoly term(const GenPoly& p, const Exponential& m);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExpTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// sum (1 + deg p_i), minus one if the identity exponential occurs; -1 for zero.
  int degree() const noexcept;
  std::vector<Exponential> spectrum() const;
  bool has_identity_in_spectrum() const noexcept;
  /// max_i deg p_i, or -1 for zero.
  int max_poly_degree() const noexcept;
  /// Polynomial attached to m (zero polynomial if m is not in the spectrum).
  GenPoly component(const Exponential& m) const;

  Scalar evaluate(const GroupElem& x) const;
  Scalar evaluate(std::span<const std::int64_t> x) const;

  /// x -> f(x + h).
  ExpPoly translate(const GroupElem& h) const;

  ExpPoly scaled(const Scalar& c) const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  ExpPoly operator-() const { return scaled(Scalar(-1)); }

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  /// Canonical expression text; see text.hpp for the grammar.
  std::string to_string() const;

 private:
  std::size_t dim_;
  std::vector<ExpTerm> terms_;
};

/// y -> f(A*y + c).
ExpPoly pullback(const ExpPoly& f, const AffineMap& map);

}  // namespace expoly
