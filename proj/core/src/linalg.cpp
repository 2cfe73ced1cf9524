#include "expoly/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "expoly/errors.hpp"

namespace expoly {

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows.at(i), cols.at(j));
  }
  return out;
}

namespace {

struct BareissResult {
  RankCertificate cert;
  Scalar last_pivot{1};
  int sign = 1;
};

BareissResult bareiss(Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> row_of(rows);
  std::vector<std::size_t> col_of(cols);
  std::iota(row_of.begin(), row_of.end(), 0);
  std::iota(col_of.begin(), col_of.end(), 0);

  BareissResult res;
  Scalar prev(1);
  std::size_t k = 0;
  while (k < rows && k < cols) {
    // leftmost column with a nonzero entry in the active block
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t j = k; j < cols && pc == cols; ++j) {
      for (std::size_t i = k; i < rows; ++i) {
        if (!m(i, j).is_zero()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pc == cols) break;
    if (pr != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pr, j), m(k, j));
      std::swap(row_of[pr], row_of[k]);
      res.sign = -res.sign;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pc), m(i, k));
      std::swap(col_of[pc], col_of[k]);
      res.sign = -res.sign;
    }
    const Scalar pivot = m(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      const Scalar lead = m(i, k);
      for (std::size_t j = k + 1; j < cols; ++j) {
        Scalar v = pivot * m(i, j);
        if (!lead.is_zero()) v -= lead * m(k, j);
        m(i, j) = v / prev;
      }
      m(i, k) = Scalar(0);
    }
    prev = pivot;
    res.cert.pivot_rows.push_back(row_of[k]);
    res.cert.pivot_cols.push_back(col_of[k]);
    ++k;
  }
  res.cert.rank = k;
  res.last_pivot = prev;
  return res;
}

}  // namespace

RankCertificate bareiss_rank(Matrix m) { return bareiss(m).cert; }

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  const auto res = bareiss(m);
  if (res.cert.rank < m.rows()) return Scalar(0);
  return res.sign > 0 ? res.last_pivot : -res.last_pivot;
}

std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b) {
  if (b.size() != a.rows()) throw DimensionMismatch(a.rows(), b.size());
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      std::swap(b[p], b[r]);
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= factor * a(r, j);
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::vector<Scalar> SpanBasis::reduce(std::vector<Scalar> v) const {
  if (v.size() != len_) throw DimensionMismatch(len_, v.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar coef = v[pivots_[k]];
    if (coef.is_zero()) continue;
    for (std::size_t j = 0; j < len_; ++j) {
      if (!rows_[k][j].is_zero()) v[j] -= coef * rows_[k][j];
    }
  }
  return v;
}

bool SpanBasis::add(const std::vector<Scalar>& v) {
  auto r = reduce(v);
  std::size_t p = 0;
  while (p < len_ && r[p].is_zero()) ++p;
  if (p == len_) return false;
  const Scalar inv = r[p].inverse();
  for (auto& x : r) x *= inv;
  // keep existing rows reduced at the new pivot
  for (auto& row : rows_) {
    const Scalar coef = row[p];
    if (coef.is_zero()) continue;
    for (std::size_t j = 0; j < len_; ++j) {
      if (!r[j].is_zero()) row[j] -= coef * r[j];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool SpanBasis::contains(const std::vector<Scalar>& v) const {
  const auto r = reduce(v);
  for (const auto& x : r) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace expoly
