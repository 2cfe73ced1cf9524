#include "expoly/gridlab.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "expoly/errors.hpp"
#include "expoly/rng.hpp"

namespace expoly {

namespace {

using Cplx = std::complex<double>;

constexpr int kRestarts = 20;
constexpr int kSweeps = 60;
constexpr double kTolerance = 1e-9;
constexpr double kWorkBudget = 1e7;  // tensor entries touched per sweep, summed over all fits

struct Split {
  std::vector<std::size_t> row_index;  // flat tensor index -> index over E
  std::vector<std::size_t> col_index;  // flat tensor index -> index over complement
  std::size_t rows = 0;
  std::size_t cols = 0;
};

Split make_split(VarSet E, std::size_t n, std::size_t volume) {
  Split s;
  std::size_t total = 1;
  for (std::size_t b = 0; b < n; ++b) total *= volume;
  s.row_index.resize(total);
  s.col_index.resize(total);
  s.rows = 1;
  s.cols = 1;
  for (std::size_t b = 0; b < n; ++b) (E.contains(b) ? s.rows : s.cols) *= volume;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    std::size_t r = 0;
    std::size_t c = 0;
    std::vector<std::size_t> digits(n);
    for (std::size_t b = n; b > 0; --b) {
      digits[b - 1] = rest % volume;
      rest /= volume;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (E.contains(b)) {
        r = r * volume + digits[b];
      } else {
        c = c * volume + digits[b];
      }
    }
    s.row_index[idx] = r;
    s.col_index[idx] = c;
  }
  return s;
}

/// Alternating least squares for T ~ sum_i u_i (x) v_i with the given splits.
double fit(const std::vector<Cplx>& T, double norm, const std::vector<const Split*>& splits, Rng& rng) {
  const std::size_t k = splits.size();
  std::vector<std::vector<Cplx>> u(k);
  std::vector<std::vector<Cplx>> v(k);
  for (std::size_t i = 0; i < k; ++i) {
    u[i].resize(splits[i]->rows);
    v[i].resize(splits[i]->cols);
    for (auto& x : u[i]) x = Cplx(2 * rng.unit() - 1, 2 * rng.unit() - 1);
    for (auto& x : v[i]) x = Cplx(2 * rng.unit() - 1, 2 * rng.unit() - 1);
  }
  std::vector<Cplx> R(T.size());
  auto residual_norm = [&] {
    R = T;
    for (std::size_t i = 0; i < k; ++i) {
      const Split& s = *splits[i];
      for (std::size_t idx = 0; idx < T.size(); ++idx) R[idx] -= u[i][s.row_index[idx]] * v[i][s.col_index[idx]];
    }
    double acc = 0;
    for (const auto& x : R) acc += std::norm(x);
    return std::sqrt(acc) / norm;
  };
  double res = residual_norm();
  for (int sweep = 0; sweep < kSweeps && res > kTolerance; ++sweep) {
    for (std::size_t i = 0; i < k; ++i) {
      const Split& s = *splits[i];
      // R currently excludes every term; add term i back
      for (std::size_t idx = 0; idx < T.size(); ++idx) R[idx] += u[i][s.row_index[idx]] * v[i][s.col_index[idx]];
      double vn = 0;
      for (const auto& x : v[i]) vn += std::norm(x);
      if (vn > 0) {
        std::fill(u[i].begin(), u[i].end(), Cplx(0));
        for (std::size_t idx = 0; idx < T.size(); ++idx) u[i][s.row_index[idx]] += R[idx] * std::conj(v[i][s.col_index[idx]]);
        for (auto& x : u[i]) x /= vn;
      }
      double un = 0;
      for (const auto& x : u[i]) un += std::norm(x);
      if (un > 0) {
        std::fill(v[i].begin(), v[i].end(), Cplx(0));
        for (std::size_t idx = 0; idx < T.size(); ++idx) v[i][s.col_index[idx]] += R[idx] * std::conj(u[i][s.row_index[idx]]);
        for (auto& x : v[i]) x /= un;
      }
      for (std::size_t idx = 0; idx < T.size(); ++idx) R[idx] -= u[i][s.row_index[idx]] * v[i][s.col_index[idx]];
    }
    double acc = 0;
    for (const auto& x : R) acc += std::norm(x);
    res = std::sqrt(acc) / norm;
  }
  return res;
}

/// Next multiset (non-decreasing index vector) over `types` choices.
bool next_multiset(std::vector<std::size_t>& m, std::size_t types) {
  std::size_t i = m.size();
  while (i > 0) {
    --i;
    if (m[i] + 1 < types) {
      ++m[i];
      for (std::size_t j = i + 1; j < m.size(); ++j) m[j] = m[i];
      return true;
    }
  }
  return false;
}

double multiset_count(std::size_t types, std::size_t k) {
  double c = 1;
  for (std::size_t j = 1; j <= k; ++j) c = c * static_cast<double>(types + j - 1) / static_cast<double>(j);
  return c;
}

}  // namespace

HeuristicResult heuristic_order_search(const ExpPoly& f, std::size_t n, std::size_t k_min, std::size_t k_max,
                                       std::uint64_t seed) {
  HeuristicResult out;
  if (n < 2 || n > 16) throw PreconditionViolation("heuristic search needs 2 <= n <= 16");
  if (f.dim() == 1) {
    out.box = GridBox::cube(1, 0, 3);
  } else if (f.dim() == 2) {
    out.box = GridBox::cube(2, 0, 1);
  } else {
    out.note = "skipped: no tiny window for d >= 3";
    return out;
  }
  const auto pts = out.box.points();
  const std::size_t volume = pts.size();
  std::size_t total = 1;
  for (std::size_t b = 0; b < n; ++b) total *= volume;

  std::vector<VarSet> types;
  for (std::uint32_t bits = 1; bits + 1 < (1U << n); bits += 2) types.emplace_back(bits);
  double work = 0;
  for (std::size_t k = std::max<std::size_t>(k_min, 1); k <= k_max; ++k) {
    work += multiset_count(types.size(), k) * kRestarts * static_cast<double>(total) * static_cast<double>(k);
  }
  if (work > kWorkBudget) {
    out.note = "skipped: search exceeds work budget";
    return out;
  }

  // f(x_1 + ... + x_n) on the tiny window, flat index with x_1 slowest
  std::vector<Cplx> T(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    GroupElem x = GroupElem::zero(f.dim());
    for (std::size_t b = n; b > 0; --b) {
      x = x + pts[rest % volume];
      rest /= volume;
    }
    T[idx] = f.evaluate(x).to_complex();
  }
  double norm = 0;
  for (const auto& x : T) norm += std::norm(x);
  norm = std::sqrt(norm);
  out.attempted = true;
  out.best_residual = 1.0;
  if (norm == 0) {
    out.feasible_order = 0;
    out.best_residual = 0;
    return out;
  }

  std::vector<Split> split_tables;
  split_tables.reserve(types.size());
  for (const auto& E : types) split_tables.push_back(make_split(E, n, volume));

  Rng rng(seed);
  for (std::size_t k = std::max<std::size_t>(k_min, 1); k <= k_max; ++k) {
    std::vector<std::size_t> choice(k, 0);
    do {
      std::vector<const Split*> splits;
      for (auto c : choice) splits.push_back(&split_tables[c]);
      for (int r = 0; r < kRestarts; ++r) {
        const double res = fit(T, norm, splits, rng);
        out.best_residual = std::min(out.best_residual, res);
        if (res <= kTolerance) {
          out.feasible_order = k;
          out.note = "numerical fit at k = " + std::to_string(k);
          return out;
        }
      }
    } while (next_multiset(choice, types.size()));
  }
  out.note = "no numerical fit up to k_max = " + std::to_string(k_max);
  return out;
}

}  // namespace expoly
