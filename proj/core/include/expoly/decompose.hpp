#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "expoly/multi.hpp"

namespace expoly {

/// Homogeneous components of p: result[i] holds the monomials of total degree
/// exactly i, so they sum to p. Empty for the zero polynomial.
std::vector<GenPoly> monom_split(const GenPoly& p);

/// One product u * v in a decomposition; u may only depend on the variables
/// in E and v only on the others.
struct DecompTerm {
  VarSet E;
  MultiExpPoly u;
  MultiExpPoly v;
};

/// Certificate that F(x_1..x_n) = sum_i u_i * v_i with admissible variable splits.
struct DecompWitness {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<DecompTerm> terms;
  /// Indices of terms whose split degenerated under restriction and could not
  /// be repaired; such a witness fails verification.
  std::vector<std::size_t> flagged;

  std::size_t order() const noexcept { return terms.size(); }
};

/// Constructive witness for f(x_1 + ... + x_n).
///
/// Each canonical term p*m with deg p = k contributes k+1 products: the
/// expansion of p(x_1 + ... + x_n) is routed monomial by monomial to the
/// bucket u_j (0 <= j <= k) of the smallest block index the monomial does not
/// use, the constant part is shared equally by the k+1 buckets, and bucket j
/// becomes the product m(x_j) * [u_j * prod_{b != j} m(x_b)] with E = {j}.
/// The order is deg f, plus one when the identity exponential is present.
///
/// Throws PreconditionViolation when n < 2 or n <= max_i deg p_i.
DecompWitness decompose_sum(const ExpPoly& f, std::size_t n);

struct VerifyReport {
  bool ok = false;
  bool identity_ok = false;
  bool dependence_ok = false;
  std::vector<std::string> violations;
  MultiExpPoly residual{1, 1};
};

/// Expands f(x_1 + ... + x_n) - sum u_i v_i symbolically and checks every
/// term's variable constraints. Throws DimensionMismatch on shape errors.
VerifyReport verify_witness(const ExpPoly& f, const DecompWitness& w);

/// Substitutes fixed values (0-based variable -> point) into every factor and
/// renumbers the free variables. Degenerate terms are re-split when they are
/// a single product, and terms sharing a factor are merged, so the order never
/// grows. Throws PreconditionViolation if fewer than two variables stay free.
DecompWitness restrict_witness(const DecompWitness& w, const std::map<std::size_t, GroupElem>& fixed);

/// Witness for f(x_1 + ... + x_{n+1}) of the same order, obtained from one for
/// f(x_1 + ... + x_n) by substituting x_n -> x_n + x_{n+1}.
DecompWitness pad_witness(const DecompWitness& w);

/// Writes F as sum_r u_r(x_A) * v_r(x_{not A}) with the minimal number of
/// products (the rank of F's coefficient matrix across the split).
std::vector<std::pair<MultiExpPoly, MultiExpPoly>> separate(const MultiExpPoly& F, VarSet A);

/// Indices j < k (0-based) split by both E1 and E2: exactly one of j, k lies in
/// E1 and exactly one lies in E2. Such a pair always exists for nonempty proper
/// subsets; the lexicographically first is returned.
std::pair<std::size_t, std::size_t> find_separated_pair(VarSet E1, VarSet E2, std::size_t n);

}  // namespace expoly
