#include "expoly/multi.hpp"

#include "expoly/errors.hpp"

namespace expoly {

VarSet VarSet::from_one_based(const std::vector<int>& indices) {
  VarSet s;
  for (int j : indices) {
    if (j < 1 || j > 32) throw MalformedInput("variable index out of range: " + std::to_string(j));
    s = s.with(static_cast<std::size_t>(j - 1));
  }
  return s;
}

std::vector<std::size_t> VarSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < 32; ++j) {
    if (contains(j)) out.push_back(j);
  }
  return out;
}

std::vector<int> VarSet::one_based() const {
  std::vector<int> out;
  for (std::size_t j : indices()) out.push_back(static_cast<int>(j) + 1);
  return out;
}

std::string VarSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int j : one_based()) {
    if (!first) out += ",";
    out += std::to_string(j);
    first = false;
  }
  return out + "}";
}

MultiExpPoly::MultiExpPoly(std::size_t n, std::size_t d) : n_(n), d_(d), f_(n * d) {}

MultiExpPoly::MultiExpPoly(std::size_t n, std::size_t d, ExpPoly f) : n_(n), d_(d), f_(std::move(f)) {
  if (f_.dim() != n * d) throw DimensionMismatch(n * d, f_.dim());
}

MultiExpPoly MultiExpPoly::constant(std::size_t n, std::size_t d, const Scalar& c) {
  return MultiExpPoly(n, d, ExpPoly::constant(n * d, c));
}

MultiExpPoly MultiExpPoly::of_block(std::size_t n, std::size_t j, const ExpPoly& g) {
  const std::size_t d = g.dim();
  AffineMap map;
  map.in_dim = n * d;
  map.offset.assign(d, 0);
  map.matrix.assign(d, std::vector<std::int64_t>(n * d, 0));
  for (std::size_t i = 0; i < d; ++i) map.matrix[i][j * d + i] = 1;
  return MultiExpPoly(n, d, pullback(g, map));
}

MultiExpPoly MultiExpPoly::of_sum(const ExpPoly& f, std::size_t n) {
  const std::size_t d = f.dim();
  AffineMap map;
  map.in_dim = n * d;
  map.offset.assign(d, 0);
  map.matrix.assign(d, std::vector<std::int64_t>(n * d, 0));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t i = 0; i < d; ++i) map.matrix[i][b * d + i] = 1;
  }
  return MultiExpPoly(n, d, pullback(f, map));
}

bool MultiExpPoly::depends_on(std::size_t j) const {
  for (const auto& t : f_.terms()) {
    for (std::size_t i = 0; i < d_; ++i) {
      if (!t.exp.lambda()[j * d_ + i].is_one()) return true;
    }
    for (const auto& [e, c] : t.poly.terms()) {
      for (std::size_t i = 0; i < d_; ++i) {
        if (e[j * d_ + i] != 0) return true;
      }
    }
  }
  return false;
}

VarSet MultiExpPoly::support() const {
  VarSet s;
  for (std::size_t j = 0; j < n_; ++j) {
    if (depends_on(j)) s = s.with(j);
  }
  return s;
}

MultiExpPoly MultiExpPoly::restrict(const std::map<std::size_t, GroupElem>& fixed) const {
  std::vector<std::size_t> free_blocks;
  for (std::size_t b = 0; b < n_; ++b) {
    if (!fixed.contains(b)) free_blocks.push_back(b);
  }
  for (const auto& [b, g] : fixed) {
    if (b >= n_) throw PreconditionViolation("restricted block " + std::to_string(b + 1) + " out of range");
    if (g.dim() != d_) throw DimensionMismatch(d_, g.dim());
  }
  if (free_blocks.empty()) throw PreconditionViolation("restriction must leave at least one block free");
  const std::size_t m = free_blocks.size();
  AffineMap map;
  map.in_dim = m * d_;
  map.offset.assign(n_ * d_, 0);
  map.matrix.assign(n_ * d_, std::vector<std::int64_t>(m * d_, 0));
  for (const auto& [b, g] : fixed) {
    for (std::size_t i = 0; i < d_; ++i) map.offset[b * d_ + i] = g.coords[i];
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < d_; ++i) map.matrix[free_blocks[k] * d_ + i][k * d_ + i] = 1;
  }
  return MultiExpPoly(m, d_, pullback(f_, map));
}

MultiExpPoly MultiExpPoly::split_block(std::size_t split) const {
  if (split >= n_) throw PreconditionViolation("split block out of range");
  AffineMap map;
  map.in_dim = (n_ + 1) * d_;
  map.offset.assign(n_ * d_, 0);
  map.matrix.assign(n_ * d_, std::vector<std::int64_t>((n_ + 1) * d_, 0));
  for (std::size_t b = 0; b < n_; ++b) {
    for (std::size_t i = 0; i < d_; ++i) map.matrix[b * d_ + i][b * d_ + i] = 1;
  }
  for (std::size_t i = 0; i < d_; ++i) map.matrix[split * d_ + i][n_ * d_ + i] = 1;
  return MultiExpPoly(n_ + 1, d_, pullback(f_, map));
}

Scalar MultiExpPoly::evaluate(const std::vector<GroupElem>& xs) const {
  if (xs.size() != n_) throw DimensionMismatch(n_, xs.size());
  std::vector<std::int64_t> flat;
  flat.reserve(n_ * d_);
  for (const auto& x : xs) {
    if (x.dim() != d_) throw DimensionMismatch(d_, x.dim());
    flat.insert(flat.end(), x.coords.begin(), x.coords.end());
  }
  return f_.evaluate(flat);
}

namespace {
void check_shape(const MultiExpPoly& a, const MultiExpPoly& b) {
  if (a.blocks() != b.blocks()) throw DimensionMismatch(a.blocks(), b.blocks());
  if (a.block_dim() != b.block_dim()) throw DimensionMismatch(a.block_dim(), b.block_dim());
}
}  // namespace

MultiExpPoly operator+(const MultiExpPoly& a, const MultiExpPoly& b) {
  check_shape(a, b);
  return MultiExpPoly(a.n_, a.d_, a.f_ + b.f_);
}

MultiExpPoly operator-(const MultiExpPoly& a, const MultiExpPoly& b) {
  check_shape(a, b);
  return MultiExpPoly(a.n_, a.d_, a.f_ - b.f_);
}

MultiExpPoly operator*(const MultiExpPoly& a, const MultiExpPoly& b) {
  check_shape(a, b);
  return MultiExpPoly(a.n_, a.d_, a.f_ * b.f_);
}

}  // namespace expoly
