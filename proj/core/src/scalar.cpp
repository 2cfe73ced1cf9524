#include "expoly/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace expoly {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long long p, long long q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  mpq_class v(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (is_real()) return Scalar(1 / re_);
  const mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar Scalar::pow(std::int64_t exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                  : static_cast<std::uint64_t>(exponent);
  Scalar result(1);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_real() && other.is_real()) {
    re_ *= other.re_;
    return *this;
  }
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw std::domain_error("division by zero scalar");
  if (other.is_real()) {
    re_ /= other.re_;
    im_ /= other.re_;
    return *this;
  }
  return *this *= other.inverse();
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') ++pos;
  bool seen_digit = false;
  bool seen_slash = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    const char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit && k + 1 < text.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational '" + text + "'");
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  mpq_class q(body, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  auto imag_text = [](const mpq_class& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return rational_to_string(v) + "i";
  };
  if (sgn(re_) == 0) return imag_text(im_);
  std::string out = "(" + rational_to_string(re_);
  if (sgn(im_) > 0) out += "+";
  out += imag_text(im_);
  out += ")";
  return out;
}

int compare(const Scalar& a, const Scalar& b) {
  auto cmp_q = [](const mpq_class& x, const mpq_class& y) {
    if (const int c = cmp(x.get_num(), y.get_num()); c != 0) return c;
    return cmp(x.get_den(), y.get_den());
  };
  if (const int c = cmp_q(a.re(), b.re()); c != 0) return c < 0 ? -1 : 1;
  const int c = cmp_q(a.im(), b.im());
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace expoly
