#include "expoly/gridlab.hpp"

#include "expoly/errors.hpp"

namespace expoly {

std::optional<Recurrence> minimal_recurrence(const std::vector<Scalar>& seq) {
  bool all_zero = true;
  for (const auto& v : seq) all_zero = all_zero && v.is_zero();
  if (all_zero) return Recurrence{};
  const std::size_t len = seq.size();
  for (std::size_t r = 1; 2 * r <= len; ++r) {
    const std::size_t eqs = len - r;
    Matrix a(eqs, r);
    std::vector<Scalar> b(eqs);
    for (std::size_t i = 0; i < eqs; ++i) {
      for (std::size_t j = 0; j < r; ++j) a(i, j) = seq[i + j];
      b[i] = seq[i + r];
    }
    if (auto c = solve(std::move(a), std::move(b))) return Recurrence{r, std::move(*c)};
  }
  return std::nullopt;
}

Reconstruction reconstruct_gep(const GridFunction& g) {
  using Kind = ReconstructionError::Kind;
  if (g.box.dim() != 1) {
    throw ReconstructionError(Kind::bad_input, "reconstruction is implemented for d = 1 only");
  }
  if (g.values.size() != g.box.volume()) {
    throw ReconstructionError(Kind::bad_input, "sample count does not match the box");
  }
  const std::int64_t lo = g.box.lo()[0];
  const std::size_t len = g.values.size();

  const auto full = minimal_recurrence(g.values);
  const std::vector<Scalar> head(g.values.begin(), g.values.begin() + static_cast<std::ptrdiff_t>((len - 1) / 2 + 1));
  const auto half = minimal_recurrence(head);
  if (!full || !half || half->order != full->order) {
    throw ReconstructionError(Kind::window_too_small,
                              "window too small: recurrence order is not stable on the window " + g.box.to_string());
  }

  Reconstruction out;
  out.order = full->order;
  if (out.order == 0) return out;

  const std::size_t r = out.order;
  std::vector<Scalar> chi(r + 1);
  for (std::size_t j = 0; j < r; ++j) chi[j] = -full->coeffs[j];
  chi[r] = Scalar(1);
  out.characteristic = UniPoly(std::move(chi));
  if (out.characteristic.coeffs()[0].is_zero()) {
    throw ReconstructionError(Kind::spectrum_outside_field,
                              "characteristic polynomial has the root 0; samples are not an exponential polynomial",
                              out.characteristic.to_string());
  }

  UniPoly unresolved({Scalar(1)});
  const auto factors = squarefree_factors(out.characteristic);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    const auto found = gaussian_rational_roots(factors[i]);
    for (const auto& root : found.roots) out.roots.emplace_back(root, i + 1);
    if (found.remainder.degree() >= 1) unresolved = unresolved * found.remainder;
  }
  if (unresolved.degree() >= 1) {
    throw ReconstructionError(Kind::spectrum_outside_field,
                              "spectrum outside scalar field: unresolved factor " + unresolved.to_string(),
                              unresolved.to_string());
  }

  // h(x) = g(lo + x) = sum_j sum_l a_{j,l} x^l lambda_j^x, solved on x = 0..r-1
  Matrix a(r, r);
  std::vector<Scalar> b(g.values.begin(), g.values.begin() + static_cast<std::ptrdiff_t>(r));
  std::size_t col = 0;
  for (const auto& [lambda, mult] : out.roots) {
    for (std::size_t l = 0; l < mult; ++l, ++col) {
      for (std::size_t x = 0; x < r; ++x) {
        a(x, col) = Scalar(static_cast<long long>(x)).pow(static_cast<std::int64_t>(l)) *
                    lambda.pow(static_cast<std::int64_t>(x));
      }
    }
  }
  const auto coeffs = solve(std::move(a), std::move(b));
  if (!coeffs) throw ReconstructionError(Kind::verification_failed, "coefficient system is inconsistent");

  std::vector<ExpTerm> terms;
  col = 0;
  for (const auto& [lambda, mult] : out.roots) {
    GenPoly p(1);
    for (std::size_t l = 0; l < mult; ++l, ++col) p.add_term({static_cast<std::uint32_t>(l)}, (*coeffs)[col]);
    terms.push_back(ExpTerm{Exponential({lambda}), std::move(p)});
  }
  const ExpPoly h = ExpPoly::canonicalize(1, std::move(terms));
  out.f = h.translate(GroupElem({-lo}));

  const auto pts = g.box.points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (out.f.evaluate(pts[k]) != g.values[k]) {
      throw ReconstructionError(Kind::verification_failed,
                                "reconstruction disagrees with the sample at x = " + std::to_string(pts[k].coords[0]));
    }
  }
  return out;
}

}  // namespace expoly
