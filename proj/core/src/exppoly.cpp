#include "expoly/exppoly.hpp"

#include <algorithm>
#include <map>

#include "expoly/errors.hpp"

namespace expoly {

ExpPoly ExpPoly::canonicalize(std::size_t d, std::vector<ExpTerm> raw) {
  std::map<Exponential, GenPoly, ExponentialLess> merged;
  for (auto& t : raw) {
    if (t.exp.dim() != d) throw DimensionMismatch(d, t.exp.dim());
    if (t.poly.dim() != d) throw DimensionMismatch(d, t.poly.dim());
    auto it = merged.find(t.exp);
    if (it == merged.end()) {
      merged.emplace(std::move(t.exp), std::move(t.poly));
    } else {
      it->second += t.poly;
    }
  }
  ExpPoly out(d);
  for (auto& [m, p] : merged) {
    if (!p.is_zero()) out.terms_.push_back(ExpTerm{m, std::move(p)});
  }
  return out;
}

ExpPoly ExpPoly::canonicalize(std::size_t d, std::vector<RawTerm> raw) {
  std::vector<ExpTerm> checked;
  checked.reserve(raw.size());
  for (auto& t : raw) checked.push_back(ExpTerm{Exponential(std::move(t.lambda)), std::move(t.poly)});
  return canonicalize(d, std::move(checked));
}

ExpPoly ExpPoly::from_poly(const GenPoly& p) { return term(p, Exponential::identity(p.dim())); }

ExpPoly ExpPoly::from_exponential(const Exponential& m, const Scalar& c) {
  return term(GenPoly::constant(m.dim(), c), m);
}

ExpPoly ExpPoly::constant(std::size_t d, const Scalar& c) { return from_poly(GenPoly::constant(d, c)); }

ExpPoly ExpPoly::term(const GenPoly& p, const Exponential& m) {
  if (p.dim() != m.dim()) throw DimensionMismatch(m.dim(), p.dim());
  ExpPoly out(m.dim());
  if (!p.is_zero()) out.terms_.push_back(ExpTerm{m, p});
  return out;
}

int ExpPoly::degree() const noexcept {
  if (terms_.empty()) return -1;
  int deg = 0;
  for (const auto& t : terms_) deg += 1 + t.poly.degree();
  return has_identity_in_spectrum() ? deg - 1 : deg;
}

std::vector<Exponential> ExpPoly::spectrum() const {
  std::vector<Exponential> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.exp);
  return out;
}

bool ExpPoly::has_identity_in_spectrum() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const ExpTerm& t) { return t.exp.is_identity(); });
}

int ExpPoly::max_poly_degree() const noexcept {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, t.poly.degree());
  return deg;
}

GenPoly ExpPoly::component(const Exponential& m) const {
  for (const auto& t : terms_) {
    if (t.exp == m) return t.poly;
  }
  return GenPoly(dim_);
}

Scalar ExpPoly::evaluate(const GroupElem& x) const { return evaluate(std::span<const std::int64_t>(x.coords)); }

Scalar ExpPoly::evaluate(std::span<const std::int64_t> x) const {
  if (x.size() != dim_) throw DimensionMismatch(dim_, x.size());
  Scalar sum(0);
  for (const auto& t : terms_) sum += t.poly.evaluate(x) * t.exp.evaluate(x);
  return sum;
}

ExpPoly ExpPoly::translate(const GroupElem& h) const {
  if (h.dim() != dim_) throw DimensionMismatch(dim_, h.dim());
  return pullback(*this, AffineMap::translation(h.coords));
}

ExpPoly ExpPoly::scaled(const Scalar& c) const {
  ExpPoly out(dim_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(ExpTerm{t.exp, t.poly.scaled(c)});
  return out;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch(a.dim_, b.dim_);
  std::vector<ExpTerm> raw = a.terms_;
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return ExpPoly::canonicalize(a.dim_, std::move(raw));
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch(a.dim_, b.dim_);
  std::vector<ExpTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) raw.push_back(ExpTerm{ta.exp * tb.exp, ta.poly * tb.poly});
  }
  return ExpPoly::canonicalize(a.dim_, std::move(raw));
}

ExpPoly pullback(const ExpPoly& f, const AffineMap& map) {
  if (map.out_dim() != f.dim()) throw DimensionMismatch(f.dim(), map.out_dim());
  const std::size_t in = map.in_dim;
  std::vector<ExpTerm> raw;
  raw.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    // m(A*y + c) = m(c) * prod_k (prod_j lambda_j^{A_jk})^{y_k}
    const Scalar factor = t.exp.evaluate(map.offset);
    std::vector<Scalar> lambda(in, Scalar(1));
    for (std::size_t k = 0; k < in; ++k) {
      for (std::size_t j = 0; j < map.out_dim(); ++j) {
        if (map.matrix[j][k] != 0) lambda[k] *= t.exp.lambda()[j].pow(map.matrix[j][k]);
      }
    }
    raw.push_back(ExpTerm{Exponential(std::move(lambda)), pullback(t.poly, map).scaled(factor)});
  }
  return ExpPoly::canonicalize(in, std::move(raw));
}

}  // namespace expoly
