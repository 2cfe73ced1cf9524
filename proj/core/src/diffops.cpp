#include "expoly/diffops.hpp"

#include "expoly/errors.hpp"

namespace expoly {

namespace {

std::string step_text(const GroupElem& h) {
  std::string out = "(";
  for (std::size_t j = 0; j < h.coords.size(); ++j) {
    if (j != 0) out += ",";
    out += std::to_string(h.coords[j]);
  }
  return out + ")";
}

}  // namespace

std::string DiffFactor::to_string() const {
  std::string out = is_plain() ? "D[h=" + step_text(step) + "]"
                               : "D[" + modifier->to_string() + ", h=" + step_text(step) + "]";
  if (power != 1) out += "^" + std::to_string(power);
  return out;
}

std::string DiffOpWord::to_string() const {
  if (factors.empty()) return "id";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " ";
    out += f.to_string();
  }
  return out;
}

ExpPoly delta(const ExpPoly& f, const GroupElem& h) {
  if (h.dim() != f.dim()) throw DimensionMismatch(f.dim(), h.dim());
  return f.translate(h) - f;
}

ExpPoly mdelta(const ExpPoly& f, const Exponential& m, const GroupElem& h) {
  if (h.dim() != f.dim()) throw DimensionMismatch(f.dim(), h.dim());
  if (m.dim() != f.dim()) throw DimensionMismatch(f.dim(), m.dim());
  return f.translate(h) - f.scaled(m.evaluate(h));
}

ExpPoly apply_word(const ExpPoly& f, const DiffOpWord& w) {
  for (const auto& factor : w.factors) {
    if (factor.power == 0) throw PreconditionViolation("difference operator power must be positive");
    if (factor.step.dim() != f.dim()) throw DimensionMismatch(f.dim(), factor.step.dim());
    if (factor.modifier && factor.modifier->dim() != f.dim()) throw DimensionMismatch(f.dim(), factor.modifier->dim());
  }
  ExpPoly g = f;
  for (const auto& factor : w.factors) {
    for (unsigned k = 0; k < factor.power && !g.is_zero(); ++k) {
      g = factor.is_plain() ? delta(g, factor.step) : mdelta(g, *factor.modifier, factor.step);
    }
  }
  return g;
}

DiffOpWord annihilator_for(const ExpPoly& f, std::span<const GroupElem> steps) {
  if (steps.size() != f.terms().size()) {
    throw PreconditionViolation("annihilator_for needs one step per spectrum element: expected " +
                                std::to_string(f.terms().size()) + ", got " + std::to_string(steps.size()));
  }
  DiffOpWord w;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& t = f.terms()[i];
    if (steps[i].dim() != f.dim()) throw DimensionMismatch(f.dim(), steps[i].dim());
    w.factors.push_back(DiffFactor::modified(t.exp, steps[i], static_cast<unsigned>(1 + t.poly.degree())));
  }
  return w;
}

}  // namespace expoly
