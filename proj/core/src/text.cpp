#include "expoly/text.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "expoly/errors.hpp"

namespace expoly {

namespace {

enum class Tok { number, imag_unit, variable, exp, lparen, rparen, comma, plus, minus, star, slash, caret, end };

struct Token {
  Tok kind;
  std::size_t pos;
  Scalar value;        // number
  std::size_t index = 0;  // variable (0-based)
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t k = 0;
  auto digits = [&](std::size_t from) {
    std::size_t e = from;
    while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
    return e;
  };
  while (k < s.size()) {
    const char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = digits(k);
      if (e + 1 < s.size() && s[e] == '/' && std::isdigit(static_cast<unsigned char>(s[e + 1]))) e = digits(e + 1);
      mpq_class q;
      try {
        q = parse_rational(std::string(s.substr(k, e - k)));
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed number", start);
      }
      Scalar v(q);
      if (e < s.size() && s[e] == 'i' && !(e + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[e + 1])))) {
        v = Scalar(0, q);
        ++e;
      }
      out.push_back({Tok::number, start, v});
      k = e;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t e = k;
      while (e < s.size() && std::isalnum(static_cast<unsigned char>(s[e]))) ++e;
      const std::string_view word = s.substr(k, e - k);
      if (word == "exp") {
        out.push_back({Tok::exp, start, {}});
      } else if (word == "i") {
        out.push_back({Tok::imag_unit, start, {}});
      } else if (word.size() >= 2 && word[0] == 't' && digits(k + 1) == e) {
        const unsigned long idx = std::stoul(std::string(word.substr(1)));
        if (idx == 0 || idx > 64) throw ParseError("variable index out of range", start);
        out.push_back({Tok::variable, start, {}, static_cast<std::size_t>(idx - 1)});
      } else {
        throw ParseError("unknown identifier '" + std::string(word) + "'", start);
      }
      k = e;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, start, {}});
    ++k;
  }
  out.push_back({Tok::end, s.size(), {}});
  return out;
}

/// Dimension implied by the text: max variable index and exp arity.
std::size_t implied_dim(const std::vector<Token>& toks) {
  std::size_t d = 0;
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (toks[k].kind == Tok::variable) d = std::max(d, toks[k].index + 1);
    if (toks[k].kind == Tok::exp && k + 1 < toks.size() && toks[k + 1].kind == Tok::lparen) {
      std::size_t depth = 0;
      std::size_t arity = 1;
      for (std::size_t j = k + 1; j < toks.size(); ++j) {
        if (toks[j].kind == Tok::lparen) ++depth;
        if (toks[j].kind == Tok::rparen && --depth == 0) break;
        if (toks[j].kind == Tok::comma && depth == 1) ++arity;
      }
      d = std::max(d, arity);
    }
  }
  return d;
}

std::optional<Scalar> as_constant(const ExpPoly& f) {
  if (f.is_zero()) return Scalar(0);
  if (f.terms().size() != 1) return std::nullopt;
  const auto& t = f.terms().front();
  if (!t.exp.is_identity() || t.poly.degree() != 0) return std::nullopt;
  return t.poly.terms().begin()->second;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t d) : toks_(std::move(toks)), d_(d) {}

  ExpPoly parse() {
    ExpPoly f = sum();
    if (peek().kind != Tok::end) throw ParseError("unexpected token", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& take() { return toks_[at_++]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError(std::string("expected ") + what, peek().pos);
    ++at_;
  }

  ExpPoly sum() {
    ExpPoly f = product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      ExpPoly g = product();
      f = minus ? f - g : f + g;
    }
    return f;
  }

  ExpPoly product() {
    ExpPoly f = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = take();
      const std::size_t pos = peek().pos;
      ExpPoly g = unary();
      if (op.kind == Tok::star) {
        f = f * g;
        continue;
      }
      const auto c = as_constant(g);
      if (!c) throw ParseError("division by a non-constant", pos);
      if (c->is_zero()) throw ParseError("division by zero", pos);
      f = f.scaled(c->inverse());
    }
    return f;
  }

  ExpPoly unary() {
    if (peek().kind == Tok::minus) {
      ++at_;
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      ++at_;
      return unary();
    }
    return power();
  }

  ExpPoly power() {
    ExpPoly base = atom();
    while (peek().kind == Tok::caret) {
      ++at_;
      bool negative = false;
      if (peek().kind == Tok::minus) {
        negative = true;
        ++at_;
      }
      const Token& e = take();
      if (e.kind != Tok::number || !e.value.is_real() || e.value.re().get_den() != 1 ||
          !e.value.re().get_num().fits_slong_p()) {
        throw ParseError("exponent must be an integer", e.pos);
      }
      const long k = e.value.re().get_num().get_si();
      if (negative) {
        const auto c = as_constant(base);
        if (c) {
          if (c->is_zero()) throw ParseError("zero to a negative power", e.pos);
          base = ExpPoly::constant(d_, c->pow(-k));
          continue;
        }
        if (base.terms().size() == 1 && base.terms().front().poly.degree() == 0) {
          // c * m with m an exponential: invert both
          const auto& t = base.terms().front();
          std::vector<Scalar> inv;
          for (const auto& l : t.exp.lambda()) inv.push_back(l.pow(-k));
          base = ExpPoly::from_exponential(Exponential(inv), t.poly.terms().begin()->second.pow(-k));
          continue;
        }
        throw ParseError("negative power of a non-monomial", e.pos);
      }
      if (k > 4096) throw ParseError("exponent too large", e.pos);
      ExpPoly acc = ExpPoly::constant(d_, Scalar(1));
      for (long j = 0; j < k; ++j) acc = acc * base;
      base = std::move(acc);
    }
    return base;
  }

  ExpPoly atom() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::number:
        return ExpPoly::constant(d_, t.value);
      case Tok::imag_unit:
        return ExpPoly::constant(d_, Scalar::i());
      case Tok::variable:
        if (t.index >= d_) throw DimensionMismatch(d_, t.index + 1);
        return ExpPoly::from_poly(GenPoly::variable(d_, t.index));
      case Tok::lparen: {
        ExpPoly f = sum();
        expect(Tok::rparen, "')'");
        return f;
      }
      case Tok::exp: {
        expect(Tok::lparen, "'(' after exp");
        std::vector<Scalar> lambda;
        for (;;) {
          const std::size_t pos = peek().pos;
          const auto c = as_constant(sum());
          if (!c) throw ParseError("exp arguments must be constants", pos);
          if (c->is_zero()) throw MalformedInput("exponential component " + std::to_string(lambda.size() + 1) + " is zero");
          lambda.push_back(*c);
          if (peek().kind == Tok::comma) {
            ++at_;
            continue;
          }
          expect(Tok::rparen, "')' or ','");
          break;
        }
        if (lambda.size() != d_) throw DimensionMismatch(d_, lambda.size());
        return ExpPoly::from_exponential(Exponential(std::move(lambda)));
      }
      default:
        throw ParseError(t.kind == Tok::end ? "unexpected end of input" : "unexpected token", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::size_t d_;
};

}  // namespace

ExpPoly parse_expr(std::string_view text, std::optional<std::size_t> dim) {
  auto toks = lex(text);
  const std::size_t implied = implied_dim(toks);
  std::size_t d = std::max<std::size_t>(implied, 1);
  if (dim) {
    if (*dim == 0) throw PreconditionViolation("dimension must be positive");
    if (implied > *dim) throw DimensionMismatch(*dim, implied);
    d = *dim;
  }
  return Parser(std::move(toks), d).parse();
}

Scalar parse_scalar(std::string_view text) {
  const auto c = as_constant(parse_expr(text, 1));
  if (!c) throw ParseError("expected a constant", 0);
  return *c;
}

GridBox parse_box(std::string_view text) {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  std::size_t k = 0;
  auto integer = [&]() -> std::int64_t {
    const std::size_t start = k;
    if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
    const std::size_t digits = k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (k == digits || k - digits > 12) throw ParseError("expected an integer", start);
    return std::stoll(std::string(text.substr(start, k - start)));
  };
  for (;;) {
    lo.push_back(integer());
    if (text.substr(k, 2) != "..") throw ParseError("expected '..'", k);
    k += 2;
    hi.push_back(integer());
    if (k == text.size()) break;
    if (text[k] != ',') throw ParseError("expected ','", k);
    ++k;
  }
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (lo[j] > hi[j]) throw ParseError("empty range on axis " + std::to_string(j + 1), 0);
  }
  return GridBox(std::move(lo), std::move(hi));
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string body;
    bool negative = false;
    const bool identity = t.exp.is_identity();
    if (t.poly.size() == 1) {
      const auto& [e, c] = *t.poly.terms().begin();
      Scalar coef = c;
      if (coef.is_real() && sgn(coef.re()) < 0) {
        negative = true;
        coef = -coef;
      }
      const std::string mono = GenPoly::monomial(e, coef).to_string();
      if (identity) {
        body = mono;
      } else if (coef.is_one() && total_degree(e) == 0) {
        body = t.exp.to_string();
      } else {
        body = mono + "*" + t.exp.to_string();
      }
    } else {
      body = identity ? t.poly.to_string() : "(" + t.poly.to_string() + ")*" + t.exp.to_string();
      if (body.front() == '-') {
        negative = true;
        body.erase(0, 1);
      }
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

}  // namespace expoly
