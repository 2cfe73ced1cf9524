#include "expoly/exponential.hpp"

#include <algorithm>

#include "expoly/errors.hpp"

namespace expoly {

GroupElem GroupElem::unit(std::size_t d, std::size_t j) {
  GroupElem e = zero(d);
  e.coords.at(j) = 1;
  return e;
}

GroupElem operator+(const GroupElem& a, const GroupElem& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  GroupElem out = a;
  for (std::size_t j = 0; j < out.coords.size(); ++j) out.coords[j] += b.coords[j];
  return out;
}

GroupElem operator-(const GroupElem& a, const GroupElem& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  GroupElem out = a;
  for (std::size_t j = 0; j < out.coords.size(); ++j) out.coords[j] -= b.coords[j];
  return out;
}

Exponential::Exponential(std::vector<Scalar> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw MalformedInput("exponential needs at least one component");
  for (std::size_t j = 0; j < lambda_.size(); ++j) {
    if (lambda_[j].is_zero()) {
      throw MalformedInput("exponential component " + std::to_string(j + 1) + " is zero");
    }
  }
}

Exponential Exponential::identity(std::size_t d) { return Exponential(std::vector<Scalar>(d, Scalar(1))); }

bool Exponential::is_identity() const noexcept {
  for (const auto& l : lambda_) {
    if (!l.is_one()) return false;
  }
  return true;
}

Scalar Exponential::evaluate(const GroupElem& x) const { return evaluate(std::span<const std::int64_t>(x.coords)); }

Scalar Exponential::evaluate(std::span<const std::int64_t> x) const {
  if (x.size() != lambda_.size()) throw DimensionMismatch(lambda_.size(), x.size());
  Scalar value(1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0 && !lambda_[j].is_one()) value *= lambda_[j].pow(x[j]);
  }
  return value;
}

Exponential operator*(const Exponential& a, const Exponential& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  std::vector<Scalar> lambda(a.dim());
  for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] = a.lambda_[j] * b.lambda_[j];
  return Exponential(std::move(lambda));
}

std::string Exponential::to_string() const {
  std::string out = "exp(";
  for (std::size_t j = 0; j < lambda_.size(); ++j) {
    if (j != 0) out += ", ";
    out += lambda_[j].to_string();
  }
  return out + ")";
}

int compare(const Exponential& a, const Exponential& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t j = 0; j < n; ++j) {
    if (const int c = compare(a.lambda()[j], b.lambda()[j]); c != 0) return c;
  }
  if (a.dim() == b.dim()) return 0;
  return a.dim() < b.dim() ? -1 : 1;
}

}  // namespace expoly
