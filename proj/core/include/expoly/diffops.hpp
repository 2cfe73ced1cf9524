#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "expoly/exppoly.hpp"

namespace expoly {

/// One factor of a difference-operator word: (D_h)^power for the plain
/// operator, or (D_{m,h})^power for the modified one, where
/// D_{m,h} f(x) = f(x+h) - m(h) f(x).
struct DiffFactor {
  std::optional<Exponential> modifier;  // nullopt: plain difference
  GroupElem step;
  unsigned power = 1;

  static DiffFactor plain(GroupElem h, unsigned power = 1) { return {std::nullopt, std::move(h), power}; }
  static DiffFactor modified(Exponential m, GroupElem h, unsigned power = 1) {
    return {std::move(m), std::move(h), power};
  }

  bool is_plain() const noexcept { return !modifier.has_value(); }
  std::string to_string() const;
};

/// Composite operator; factors commute, so the order is immaterial.
struct DiffOpWord {
  std::vector<DiffFactor> factors;

  std::string to_string() const;
};

/// x -> f(x+h) - f(x).
ExpPoly delta(const ExpPoly& f, const GroupElem& h);

/// x -> f(x+h) - m(h) f(x).
ExpPoly mdelta(const ExpPoly& f, const Exponential& m, const GroupElem& h);

/// Applies every factor in turn. Throws DimensionMismatch or PreconditionViolation
/// (power 0).
ExpPoly apply_word(const ExpPoly& f, const DiffOpWord& w);

/// The word prod_i D_{m_i,h_i}^{1 + deg p_i} built from the canonical terms
/// p_i * m_i of f, with steps[i] paired with the i-th spectrum element. It
/// annihilates f for every choice of steps. Empty word for f = 0.
DiffOpWord annihilator_for(const ExpPoly& f, std::span<const GroupElem> steps);

}  // namespace expoly
