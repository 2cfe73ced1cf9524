#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "expoly/scalar.hpp"

namespace expoly {

/// Element of the free abelian group Z^d.
struct GroupElem {
  std::vector<std::int64_t> coords;

  GroupElem() = default;
  explicit GroupElem(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  GroupElem(std::initializer_list<std::int64_t> c) : coords(c) {}

  static GroupElem zero(std::size_t d) { return GroupElem(std::vector<std::int64_t>(d, 0)); }
  /// j-th standard generator (0-based).
  static GroupElem unit(std::size_t d, std::size_t j);

  std::size_t dim() const noexcept { return coords.size(); }

  friend GroupElem operator+(const GroupElem& a, const GroupElem& b);
  friend GroupElem operator-(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

/// Exponential x -> prod_j lambda_j^{x_j} on Z^d; every lambda_j is nonzero.
class Exponential {
 public:
  /// Throws MalformedInput when some component is zero or the tuple is empty.
  explicit Exponential(std::vector<Scalar> lambda);

  static Exponential identity(std::size_t d);
  /// 1-dimensional convenience.
  static Exponential of(const Scalar& lambda) { return Exponential(std::vector<Scalar>{lambda}); }

  std::size_t dim() const noexcept { return lambda_.size(); }
  const std::vector<Scalar>& lambda() const noexcept { return lambda_; }
  bool is_identity() const noexcept;

  /// Throws DimensionMismatch.
  Scalar evaluate(const GroupElem& x) const;
  Scalar evaluate(std::span<const std::int64_t> x) const;

  /// Pointwise product of exponentials (again an exponential).
  friend Exponential operator*(const Exponential& a, const Exponential& b);
  friend bool operator==(const Exponential& a, const Exponential& b) { return a.lambda_ == b.lambda_; }

  std::string to_string() const;

 private:
  std::vector<Scalar> lambda_;
};

/// Canonical total order on exponentials (componentwise, see compare(Scalar, Scalar)).
int compare(const Exponential& a, const Exponential& b);

struct ExponentialLess {
  bool operator()(const Exponential& a, const Exponential& b) const { return compare(a, b) < 0; }
};

}  // namespace expoly
