#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "expoly/scalar.hpp"

namespace expoly {

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact rank with the pivot positions (original row/column indices) of a
/// nonsingular minor of that size.
struct RankCertificate {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
};

/// Fraction-free (Bareiss) elimination. Pivot rule: the leftmost column that
/// still has a nonzero entry, topmost nonzero row in it.
RankCertificate bareiss_rank(Matrix m);

/// Determinant via Bareiss elimination; throws std::invalid_argument unless square.
Scalar determinant(Matrix m);

/// A solution of A x = b with free unknowns set to zero, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b);

/// Incrementally maintained row-echelon basis of a subspace of Q(i)^len.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t len) : len_(len) {}

  /// Adds v; returns false if v was already in the span.
  bool add(const std::vector<Scalar>& v);
  bool contains(const std::vector<Scalar>& v) const;
  std::size_t dimension() const noexcept { return rows_.size(); }

 private:
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;

  std::size_t len_;
  std::vector<std::vector<Scalar>> rows_;  // each with a unit pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace expoly
