#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "expoly/exppoly.hpp"

namespace expoly {

/// Subset of the variable indices {0, ..., n-1} (n <= 32), stored as a bit mask.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint32_t bits) : bits_(bits) {}

  static VarSet full(std::size_t n) { return VarSet(n >= 32 ? ~0U : ((1U << n) - 1U)); }
  static VarSet single(std::size_t j) { return VarSet(1U << j); }
  /// From 1-based indices as used in the text and JSON interfaces.
  static VarSet from_one_based(const std::vector<int>& indices);

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool contains(std::size_t j) const noexcept { return (bits_ >> j) & 1U; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept { return std::popcount(bits_); }

  VarSet with(std::size_t j) const { return VarSet(bits_ | (1U << j)); }
  VarSet complement(std::size_t n) const { return VarSet(full(n).bits_ & ~bits_); }
  bool is_proper_nonempty(std::size_t n) const { return !empty() && (bits_ & ~full(n).bits_) == 0 && *this != full(n); }
  bool is_subset_of(VarSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  std::vector<std::size_t> indices() const;
  std::vector<int> one_based() const;

  friend constexpr bool operator==(VarSet, VarSet) = default;
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }
  friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }

  /// `{1,3}` (1-based).
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

/// A function of n block variables x_1..x_n, each in Z^d, stored as an
/// ExpPoly over Z^{n*d}. Coordinate t_{b*d + i + 1} is the i-th coordinate of block b.
class MultiExpPoly {
 public:
  MultiExpPoly(std::size_t n, std::size_t d);
  /// Throws DimensionMismatch unless f.dim() == n*d.
  MultiExpPoly(std::size_t n, std::size_t d, ExpPoly f);

  static MultiExpPoly constant(std::size_t n, std::size_t d, const Scalar& c);
  /// g applied to block j alone: (x_1..x_n) -> g(x_j).
  static MultiExpPoly of_block(std::size_t n, std::size_t j, const ExpPoly& g);
  /// f(x_1 + ... + x_n).
  static MultiExpPoly of_sum(const ExpPoly& f, std::size_t n);

  std::size_t blocks() const noexcept { return n_; }
  std::size_t block_dim() const noexcept { return d_; }
  const ExpPoly& function() const noexcept { return f_; }
  bool is_zero() const noexcept { return f_.is_zero(); }

  /// Block j (0-based) is used iff some monomial has a positive exponent in it or
  /// some exponential has a non-unit component in it.
  bool depends_on(std::size_t j) const;
  VarSet support() const;

  /// Fixes the listed blocks at the given points; the remaining blocks are
  /// renumbered in increasing order.
  MultiExpPoly restrict(const std::map<std::size_t, GroupElem>& fixed) const;
  /// Function of n+1 blocks obtained by substituting x_split -> x_split + x_{n+1}.
  MultiExpPoly split_block(std::size_t split) const;

  Scalar evaluate(const std::vector<GroupElem>& xs) const;

  friend MultiExpPoly operator+(const MultiExpPoly& a, const MultiExpPoly& b);
  friend MultiExpPoly operator-(const MultiExpPoly& a, const MultiExpPoly& b);
  friend MultiExpPoly operator*(const MultiExpPoly& a, const MultiExpPoly& b);
  MultiExpPoly scaled(const Scalar& c) const { return MultiExpPoly(n_, d_, f_.scaled(c)); }
  friend bool operator==(const MultiExpPoly&, const MultiExpPoly&) = default;

  std::string to_string() const { return f_.to_string(); }

 private:
  std::size_t n_;
  std::size_t d_;
  ExpPoly f_;
};

}  // namespace expoly
