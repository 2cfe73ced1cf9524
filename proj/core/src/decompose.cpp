#include "expoly/decompose.hpp"

#include <optional>
#include <stdexcept>

#include "expoly/errors.hpp"

namespace expoly {

std::vector<GenPoly> monom_split(const GenPoly& p) {
  std::vector<GenPoly> parts;
  const int deg = p.degree();
  for (int i = 0; i <= deg; ++i) parts.push_back(p.homogeneous_part(i));
  return parts;
}

namespace {

/// Blocks (of size d) touched by a monomial over Z^{n*d}.
VarSet blocks_used(const Exponents& e, std::size_t n, std::size_t d) {
  VarSet s;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t i = 0; i < d; ++i) {
      if (e[b * d + i] != 0) {
        s = s.with(b);
        break;
      }
    }
  }
  return s;
}

/// m applied to every block except `skip` (pass n to skip none).
Exponential spread(const Exponential& m, std::size_t n, std::size_t skip) {
  const std::size_t d = m.dim();
  std::vector<Scalar> lambda(n * d, Scalar(1));
  for (std::size_t b = 0; b < n; ++b) {
    if (b == skip) continue;
    for (std::size_t i = 0; i < d; ++i) lambda[b * d + i] = m.lambda()[i];
  }
  return Exponential(std::move(lambda));
}

}  // namespace

DecompWitness decompose_sum(const ExpPoly& f, std::size_t n) {
  if (n < 2) throw PreconditionViolation("decompose_sum needs n >= 2");
  if (n > 32) throw PreconditionViolation("decompose_sum supports at most 32 variables");
  const int n0 = f.max_poly_degree();
  if (!f.is_zero() && static_cast<int>(n) <= n0) {
    throw PreconditionViolation("decompose_sum needs n > max deg p_i = " + std::to_string(n0) + ", got n = " +
                                std::to_string(n));
  }
  const std::size_t d = f.dim();
  DecompWitness w{n, d, {}, {}};

  AffineMap sum_map;
  sum_map.in_dim = n * d;
  sum_map.offset.assign(d, 0);
  sum_map.matrix.assign(d, std::vector<std::int64_t>(n * d, 0));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t i = 0; i < d; ++i) sum_map.matrix[i][b * d + i] = 1;
  }

  for (const auto& term : f.terms()) {
    const auto k = static_cast<std::size_t>(term.poly.degree());
    const std::size_t bucket_count = k + 1;
    const GenPoly expanded = pullback(term.poly, sum_map);

    std::vector<GenPoly> buckets(bucket_count, GenPoly(n * d));
    const Scalar share = Scalar(1) / Scalar(static_cast<long long>(bucket_count));
    for (const auto& [e, c] : expanded.terms()) {
      const VarSet used = blocks_used(e, n, d);
      if (used.empty()) {
        for (auto& bucket : buckets) bucket.add_term(e, c * share);
        continue;
      }
      // deg <= k, so at most k blocks are used and one of 0..k is free
      std::size_t j = 0;
      while (used.contains(j)) ++j;
      buckets[j].add_term(e, c);
    }

    for (std::size_t j = 0; j < bucket_count; ++j) {
      // u = m(x_j); v = bucket_j * prod_{b != j} m(x_b)
      std::vector<Scalar> lambda_u(n * d, Scalar(1));
      for (std::size_t i = 0; i < d; ++i) lambda_u[j * d + i] = term.exp.lambda()[i];
      DecompTerm t{VarSet::single(j),
                   MultiExpPoly(n, d, ExpPoly::from_exponential(Exponential(std::move(lambda_u)))),
                   MultiExpPoly(n, d, ExpPoly::term(buckets[j], spread(term.exp, n, j)))};
      w.terms.push_back(std::move(t));
    }
  }
  return w;
}

VerifyReport verify_witness(const ExpPoly& f, const DecompWitness& w) {
  if (w.d != f.dim()) throw DimensionMismatch(f.dim(), w.d);
  if (w.n < 1) throw PreconditionViolation("witness has no variables");
  VerifyReport report;
  report.dependence_ok = true;
  MultiExpPoly total(w.n, w.d);
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    const auto& t = w.terms[i];
    if (t.u.blocks() != w.n || t.v.blocks() != w.n) throw DimensionMismatch(w.n, t.u.blocks() != w.n ? t.u.blocks() : t.v.blocks());
    if (t.u.block_dim() != w.d || t.v.block_dim() != w.d) throw DimensionMismatch(w.d, t.u.block_dim() != w.d ? t.u.block_dim() : t.v.block_dim());
    const std::string label = "term " + std::to_string(i + 1);
    if (!t.E.is_proper_nonempty(w.n)) {
      report.dependence_ok = false;
      report.violations.push_back(label + ": E = " + t.E.to_string() + " is not a nonempty proper subset");
    }
    if (!t.u.support().is_subset_of(t.E)) {
      report.dependence_ok = false;
      report.violations.push_back(label + ": u depends on " + t.u.support().to_string() + " outside E = " +
                                  t.E.to_string());
    }
    if (!t.v.support().is_subset_of(t.E.complement(w.n))) {
      report.dependence_ok = false;
      report.violations.push_back(label + ": v depends on " + t.v.support().to_string() + " inside E = " +
                                  t.E.to_string());
    }
    total = total + t.u * t.v;
  }
  for (std::size_t idx : w.flagged) {
    report.dependence_ok = false;
    report.violations.push_back("term " + std::to_string(idx + 1) + ": flagged as degenerate by restriction");
  }
  report.residual = MultiExpPoly::of_sum(f, w.n) - total;
  report.identity_ok = report.residual.is_zero();
  report.ok = report.identity_ok && report.dependence_ok;
  return report;
}

std::vector<std::pair<MultiExpPoly, MultiExpPoly>> separate(const MultiExpPoly& F, VarSet A) {
  const std::size_t n = F.blocks();
  const std::size_t d = F.block_dim();
  const std::size_t dim = n * d;

  // Atoms: (exponential, monomial) restricted to one side of the split.
  struct Atom {
    Exponential exp;
    Exponents exps;
  };
  auto atom_less = [](const Atom& a, const Atom& b) {
    if (const int c = compare(a.exp, b.exp); c != 0) return c < 0;
    return a.exps < b.exps;
  };
  std::map<Atom, std::map<Atom, Scalar, decltype(atom_less)>, decltype(atom_less)> matrix(atom_less);

  for (const auto& t : F.function().terms()) {
    std::vector<Scalar> la(dim, Scalar(1));
    std::vector<Scalar> lb(dim, Scalar(1));
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < d; ++i) (A.contains(b) ? la : lb)[b * d + i] = t.exp.lambda()[b * d + i];
    }
    const Exponential ea(la);
    const Exponential eb(lb);
    for (const auto& [e, c] : t.poly.terms()) {
      Exponents xa(dim, 0);
      Exponents xb(dim, 0);
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < d; ++i) (A.contains(b) ? xa : xb)[b * d + i] = e[b * d + i];
      }
      auto& row = matrix.try_emplace(Atom{ea, xa}, atom_less).first->second;
      auto [it, inserted] = row.try_emplace(Atom{eb, xb}, c);
      if (!inserted) it->second += c;
    }
  }

  // Rank-one deflation over the exact field.
  std::vector<std::pair<MultiExpPoly, MultiExpPoly>> out;
  auto atom_fn = [&](const Atom& a, const Scalar& c) {
    return ExpPoly::term(GenPoly::monomial(a.exps, c), a.exp);
  };
  for (;;) {
    const Atom* pivot_row = nullptr;
    const Atom* pivot_col = nullptr;
    Scalar pivot;
    for (const auto& [r, row] : matrix) {
      for (const auto& [c, v] : row) {
        if (!v.is_zero()) {
          pivot_row = &r;
          pivot_col = &c;
          pivot = v;
          break;
        }
      }
      if (pivot_row != nullptr) break;
    }
    if (pivot_row == nullptr) break;
    const Atom prow = *pivot_row;
    const Atom pcol = *pivot_col;
    std::vector<std::pair<Atom, Scalar>> col_vals;
    for (const auto& [r, row] : matrix) {
      auto it = row.find(pcol);
      if (it != row.end() && !it->second.is_zero()) col_vals.emplace_back(r, it->second / pivot);
    }
    std::vector<std::pair<Atom, Scalar>> row_vals;
    for (const auto& [c, v] : matrix.at(prow)) {
      if (!v.is_zero()) row_vals.emplace_back(c, v);
    }
    ExpPoly u(dim);
    for (const auto& [a, c] : col_vals) u = u + atom_fn(a, c);
    ExpPoly v(dim);
    for (const auto& [a, c] : row_vals) v = v + atom_fn(a, c);
    for (const auto& [r, cr] : col_vals) {
      auto& row = matrix.at(r);
      for (const auto& [c, cc] : row_vals) {
        auto [it, inserted] = row.try_emplace(c, -(cr * cc));
        if (!inserted) it->second -= cr * cc;
      }
    }
    out.emplace_back(MultiExpPoly(n, d, std::move(u)), MultiExpPoly(n, d, std::move(v)));
  }
  return out;
}

namespace {

/// Returns (E, u, v) for a single-product split of F over some proper split
/// of the n variables, if one exists.
std::optional<DecompTerm> single_product(const MultiExpPoly& F) {
  const std::size_t n = F.blocks();
  for (std::uint32_t bits = 1; bits + 1 < (1U << n); ++bits) {
    const VarSet A(bits);
    auto parts = separate(F, A);
    if (parts.size() == 1) return DecompTerm{A, std::move(parts[0].first), std::move(parts[0].second)};
  }
  return std::nullopt;
}

}  // namespace

DecompWitness restrict_witness(const DecompWitness& w, const std::map<std::size_t, GroupElem>& fixed) {
  for (const auto& [b, g] : fixed) {
    if (b >= w.n) throw PreconditionViolation("fixed variable " + std::to_string(b + 1) + " out of range");
    if (g.dim() != w.d) throw DimensionMismatch(w.d, g.dim());
  }
  if (w.n < fixed.size() + 2) throw PreconditionViolation("restriction must leave at least two free variables");
  const std::size_t m = w.n - fixed.size();

  std::vector<std::size_t> new_index(w.n, w.n);
  for (std::size_t b = 0, k = 0; b < w.n; ++b) {
    if (!fixed.contains(b)) new_index[b] = k++;
  }
  auto remap = [&](VarSet s) {
    VarSet out;
    for (std::size_t b : s.indices()) {
      if (b < w.n && new_index[b] < w.n) out = out.with(new_index[b]);
    }
    return out;
  };

  DecompWitness out{m, w.d, {}, {}};
  std::vector<bool> flagged;
  for (const auto& t : w.terms) {
    MultiExpPoly u = t.u.restrict(fixed);
    MultiExpPoly v = t.v.restrict(fixed);
    if (u.is_zero() || v.is_zero()) continue;
    const VarSet E = remap(t.E);
    if (E.is_proper_nonempty(m)) {
      out.terms.push_back(DecompTerm{E, std::move(u), std::move(v)});
      flagged.push_back(false);
      continue;
    }
    // One side collapsed to a constant: absorb it and try to re-split the product.
    MultiExpPoly product = u * v;
    if (auto split = single_product(product)) {
      out.terms.push_back(std::move(*split));
      flagged.push_back(false);
    } else {
      out.terms.push_back(DecompTerm{E, std::move(u), std::move(v)});
      flagged.push_back(true);
    }
  }

  // Merge terms over the same split that share a factor.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < out.terms.size() && !merged; ++i) {
      if (flagged[i]) continue;
      for (std::size_t j = i + 1; j < out.terms.size() && !merged; ++j) {
        if (flagged[j]) continue;
        auto& a = out.terms[i];
        auto b = out.terms[j];
        if (b.E == a.E.complement(m)) {
          std::swap(b.u, b.v);
          b.E = a.E;
        }
        if (b.E != a.E) continue;
        if (a.u == b.u) {
          a.v = a.v + b.v;
        } else if (a.v == b.v) {
          a.u = a.u + b.u;
        } else {
          continue;
        }
        out.terms.erase(out.terms.begin() + static_cast<std::ptrdiff_t>(j));
        flagged.erase(flagged.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
    }
  }
  for (std::size_t i = 0; i < out.terms.size(); ++i) {
    if (flagged[i]) out.flagged.push_back(i);
  }
  return out;
}

DecompWitness pad_witness(const DecompWitness& w) {
  if (w.n < 1 || w.n >= 32) throw PreconditionViolation("pad_witness supports 1..31 variables");
  const std::size_t last = w.n - 1;
  DecompWitness out{w.n + 1, w.d, {}, w.flagged};
  for (const auto& t : w.terms) {
    const VarSet E = t.E.contains(last) ? t.E.with(w.n) : t.E;
    out.terms.push_back(DecompTerm{E, t.u.split_block(last), t.v.split_block(last)});
  }
  return out;
}

std::pair<std::size_t, std::size_t> find_separated_pair(VarSet E1, VarSet E2, std::size_t n) {
  if (n < 2 || n > 32) throw PreconditionViolation("find_separated_pair needs 2 <= n <= 32");
  if (!E1.is_proper_nonempty(n) || !E2.is_proper_nonempty(n)) {
    throw PreconditionViolation("find_separated_pair needs nonempty proper subsets");
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (E1.contains(j) != E1.contains(k) && E2.contains(j) != E2.contains(k)) return {j, k};
    }
  }
  throw std::logic_error("no separated pair found");
}

}  // namespace expoly
