#include "expoly/genpoly.hpp"

#include <algorithm>
#include <numeric>

#include "expoly/errors.hpp"

namespace expoly {

std::uint32_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

AffineMap AffineMap::translation(std::span<const std::int64_t> h) {
  AffineMap map;
  map.in_dim = h.size();
  map.offset.assign(h.begin(), h.end());
  map.matrix.assign(h.size(), std::vector<std::int64_t>(h.size(), 0));
  for (std::size_t j = 0; j < h.size(); ++j) map.matrix[j][j] = 1;
  return map;
}

GenPoly GenPoly::constant(std::size_t d, const Scalar& c) {
  GenPoly p(d);
  p.add_term(Exponents(d, 0), c);
  return p;
}

GenPoly GenPoly::variable(std::size_t d, std::size_t j) {
  if (j >= d) throw DimensionMismatch(d, j + 1);
  Exponents e(d, 0);
  e[j] = 1;
  GenPoly p(d);
  p.add_term(e, Scalar(1));
  return p;
}

GenPoly GenPoly::monomial(Exponents exps, const Scalar& c) {
  GenPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

int GenPoly::degree() const noexcept {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(total_degree(e)));
  return deg;
}

Scalar GenPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void GenPoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != dim_) throw DimensionMismatch(dim_, e.size());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GenPoly GenPoly::homogeneous_part(int k) const {
  GenPoly out(dim_);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(total_degree(e)) == k) out.terms_.emplace(e, c);
  }
  return out;
}

Scalar GenPoly::evaluate(std::span<const std::int64_t> x) const {
  if (x.size() != dim_) throw DimensionMismatch(dim_, x.size());
  Scalar sum(0);
  for (const auto& [e, c] : terms_) {
    mpz_class prod = 1;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (e[j] == 0) continue;
      mpz_class power;
      mpz_class base(static_cast<long>(x[j]));
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e[j]);
      prod *= power;
    }
    sum += c * Scalar(mpq_class(prod));
  }
  return sum;
}

GenPoly GenPoly::pow(unsigned k) const {
  GenPoly result = constant(dim_, Scalar(1));
  GenPoly base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

GenPoly GenPoly::scaled(const Scalar& c) const {
  GenPoly out(dim_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

GenPoly& GenPoly::operator+=(const GenPoly& other) {
  if (other.dim_ != dim_) throw DimensionMismatch(dim_, other.dim_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& other) {
  if (other.dim_ != dim_) throw DimensionMismatch(dim_, other.dim_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch(a.dim_, b.dim_);
  GenPoly out(a.dim_);
  Exponents e(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

GenPoly substitute(const GenPoly& p, std::span<const GenPoly> images, std::size_t target_dim) {
  if (images.size() != p.dim()) throw DimensionMismatch(p.dim(), images.size());
  for (const auto& img : images) {
    if (img.dim() != target_dim) throw DimensionMismatch(target_dim, img.dim());
  }
  // powers[j][k] = images[j]^k, grown lazily
  std::vector<std::vector<GenPoly>> powers(images.size());
  auto power = [&](std::size_t j, std::uint32_t k) -> const GenPoly& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(GenPoly::constant(target_dim, Scalar(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[j]);
    return cache[k];
  };
  GenPoly out(target_dim);
  for (const auto& [e, c] : p.terms()) {
    GenPoly term = GenPoly::constant(target_dim, c);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] != 0) term = term * power(j, e[j]);
    }
    out += term;
  }
  return out;
}

GenPoly pullback(const GenPoly& p, const AffineMap& map) {
  if (map.out_dim() != p.dim()) throw DimensionMismatch(p.dim(), map.out_dim());
  std::vector<GenPoly> images;
  images.reserve(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) {
    GenPoly img = GenPoly::constant(map.in_dim, Scalar(map.offset[j]));
    for (std::size_t k = 0; k < map.in_dim; ++k) {
      if (map.matrix[j][k] != 0) img += GenPoly::variable(map.in_dim, k).scaled(Scalar(map.matrix[j][k]));
    }
    images.push_back(std::move(img));
  }
  return substitute(p, images, map.in_dim);
}

std::vector<std::pair<Exponents, Scalar>> ordered_terms(const GenPoly& p) {
  std::vector<std::pair<Exponents, Scalar>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto da = total_degree(a.first);
    const auto db = total_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return out;
}

std::string GenPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ordered_terms(*this)) {
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    Scalar coef = c;
    bool negative = false;
    if (coef.is_real() && sgn(coef.re()) < 0) {
      negative = true;
      coef = -coef;
    }
    std::string body;
    if (mono.empty()) {
      body = coef.to_string();
    } else if (coef.is_one()) {
      body = mono;
    } else {
      body = coef.to_string() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace expoly
