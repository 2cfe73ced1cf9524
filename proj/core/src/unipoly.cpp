#include "expoly/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace expoly {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::linear(const Scalar& root) { return UniPoly({-root, Scalar(1)}); }

Scalar UniPoly::evaluate(const Scalar& z) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Scalar(static_cast<long long>(k));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const Scalar inv = leading().inverse();
  std::vector<Scalar> out = coeffs_;
  for (auto& c : out) c *= inv;
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] -= b.coeffs_[k];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Scalar mag = c;
    bool negative = false;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      mag = -c;
    }
    std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    std::string body;
    if (mono.empty()) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = mag.to_string() + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Scalar inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Scalar coef = rem[static_cast<std::size_t>(k)] * inv;
    quot[static_cast<std::size_t>(k - db)] = coef;
    if (coef.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= coef * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<UniPoly> squarefree_factors(const UniPoly& p) {
  std::vector<UniPoly> out;
  if (p.degree() < 1) return out;
  const UniPoly f = p.monic();
  const UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = divmod(f, a).first;
  UniPoly c = divmod(fp, a).first;
  UniPoly dd = c - b.derivative();
  while (b.degree() >= 1) {
    UniPoly g = gcd(b, dd);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(dd, g).first;
    dd = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

std::vector<std::complex<double>> approximate_roots(const UniPoly& p) {
  using C = std::complex<long double>;
  const int n = p.degree();
  std::vector<std::complex<double>> result;
  if (n < 1) return result;
  std::vector<C> a(static_cast<std::size_t>(n) + 1);
  const Scalar inv = p.leading().inverse();
  for (int k = 0; k <= n; ++k) {
    const auto c = (p.coeffs()[static_cast<std::size_t>(k)] * inv).to_complex();
    a[static_cast<std::size_t>(k)] = C(c.real(), c.imag());
  }
  auto eval = [&](C z, C& dz) {
    C v = a[static_cast<std::size_t>(n)];
    dz = 0;
    for (int k = n - 1; k >= 0; --k) {
      dz = dz * z + v;
      v = v * z + a[static_cast<std::size_t>(k)];
    }
    return v;
  };
  long double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[static_cast<std::size_t>(k)]));
  const long double radius = 1 + bound;
  std::vector<C> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * (k + 0.25L) / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5L, angle);
  }
  for (int iter = 0; iter < 500; ++iter) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      C dz;
      const C v = eval(z[static_cast<std::size_t>(i)], dz);
      if (v == C(0)) continue;
      const C ratio = v / dz;
      C sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += C(1) / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      }
      const C step = ratio / (C(1) - ratio * sum);
      z[static_cast<std::size_t>(i)] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  for (const auto& r : z) result.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return result;
}

namespace {

/// Continued-fraction convergents of x with denominator <= max_den.
std::vector<mpq_class> convergents(double x, long max_den) {
  std::vector<mpq_class> out;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  out.emplace_back(h, k);
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && std::abs(frac) > 1e-15; ++iter) {
    const double inv = 1.0 / frac;
    const double a = std::floor(inv);
    if (a > 1e12) break;
    frac = inv - a;
    const mpz_class ai = static_cast<long>(a);
    mpz_class h_next = ai * h + h_prev;
    mpz_class k_next = ai * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    mpq_class q(h, k);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace

mpq_class rationalize(double x, long max_den) { return convergents(x, max_den).back(); }

GaussianRoots gaussian_rational_roots(const UniPoly& squarefree) {
  GaussianRoots result;
  UniPoly rest = squarefree.monic();
  constexpr long kMaxDen = 1000000;
  for (const auto& approx : approximate_roots(rest)) {
    if (rest.degree() < 1) break;
    const double tol = 1e-6 * std::max(1.0, std::abs(approx));
    auto re_cands = convergents(approx.real(), kMaxDen);
    auto im_cands = std::abs(approx.imag()) < tol ? std::vector<mpq_class>{mpq_class(0)}
                                                   : convergents(approx.imag(), kMaxDen);
    std::reverse(re_cands.begin(), re_cands.end());
    std::reverse(im_cands.begin(), im_cands.end());
    bool found = false;
    for (const auto& re : re_cands) {
      if (std::abs(re.get_d() - approx.real()) > tol) continue;
      for (const auto& im : im_cands) {
        if (std::abs(im.get_d() - approx.imag()) > tol) continue;
        const Scalar candidate(re, im);
        if (!rest.evaluate(candidate).is_zero()) continue;
        result.roots.push_back(candidate);
        rest = divmod(rest, UniPoly::linear(candidate)).first;
        found = true;
        break;
      }
      if (found) break;
    }
  }
  result.remainder = rest;
  return result;
}

}  // namespace expoly
