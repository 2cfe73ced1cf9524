#include "expoly/gridlab.hpp"

#include <algorithm>
#include <map>

#include "expoly/decompose.hpp"
#include "expoly/errors.hpp"

namespace expoly {

GridBox::GridBox(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty()) throw MalformedInput("grid box needs at least one axis");
  if (lo_.size() != hi_.size()) throw DimensionMismatch(lo_.size(), hi_.size());
  for (std::size_t j = 0; j < lo_.size(); ++j) {
    if (lo_[j] > hi_[j]) throw MalformedInput("grid box axis " + std::to_string(j + 1) + " has lo > hi");
  }
}

GridBox GridBox::cube(std::size_t d, std::int64_t lo, std::int64_t hi) {
  return GridBox(std::vector<std::int64_t>(d, lo), std::vector<std::int64_t>(d, hi));
}

std::size_t GridBox::volume() const noexcept {
  std::size_t v = 1;
  for (std::size_t j = 0; j < lo_.size(); ++j) v *= static_cast<std::size_t>(hi_[j] - lo_[j] + 1);
  return v;
}

std::vector<GroupElem> GridBox::points() const {
  std::vector<GroupElem> out;
  out.reserve(volume());
  GroupElem x(lo_);
  for (;;) {
    out.push_back(x);
    std::size_t j = lo_.size();
    while (j > 0) {
      --j;
      if (x.coords[j] < hi_[j]) {
        ++x.coords[j];
        break;
      }
      x.coords[j] = lo_[j];
      if (j == 0) return out;
    }
  }
}

std::string GridBox::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < lo_.size(); ++j) {
    if (j != 0) out += ",";
    out += std::to_string(lo_[j]) + ".." + std::to_string(hi_[j]);
  }
  return out;
}

GridFunction sample(const ExpPoly& f, const GridBox& box) {
  if (box.dim() != f.dim()) throw DimensionMismatch(f.dim(), box.dim());
  GridFunction g{box, {}};
  const auto pts = box.points();
  g.values.reserve(pts.size());
  for (const auto& x : pts) g.values.push_back(f.evaluate(x));
  return g;
}

RankCertificate sum_rank(const ExpPoly& f, const GridBox& box) {
  if (box.dim() != f.dim()) throw DimensionMismatch(f.dim(), box.dim());
  const auto pts = box.points();
  // every x + y lies in the doubled box; sample it once
  std::vector<std::int64_t> lo2(box.dim());
  std::vector<std::int64_t> hi2(box.dim());
  std::vector<std::size_t> stride(box.dim());
  for (std::size_t j = 0; j < box.dim(); ++j) {
    lo2[j] = 2 * box.lo()[j];
    hi2[j] = 2 * box.hi()[j];
  }
  const GridBox doubled(lo2, hi2);
  const auto values = sample(f, doubled).values;
  std::size_t s = 1;
  for (std::size_t j = box.dim(); j > 0; --j) {
    stride[j - 1] = s;
    s *= static_cast<std::size_t>(hi2[j - 1] - lo2[j - 1] + 1);
  }
  Matrix m(pts.size(), pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < box.dim(); ++j) {
        idx += static_cast<std::size_t>(pts[a].coords[j] + pts[b].coords[j] - lo2[j]) * stride[j];
      }
      m(a, b) = values[idx];
    }
  }
  return bareiss_rank(std::move(m));
}

RankCertificate bivariate_rank(const MultiExpPoly& F, const GridBox& box) {
  if (F.blocks() != 2) throw PreconditionViolation("bivariate_rank needs a two-variable function");
  if (box.dim() != F.block_dim()) throw DimensionMismatch(F.block_dim(), box.dim());
  const auto pts = box.points();
  Matrix m(pts.size(), pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) m(a, b) = F.evaluate({pts[a], pts[b]});
  }
  return bareiss_rank(std::move(m));
}

namespace {

/// Proper nonempty splits up to complement: those containing variable 0.
std::vector<VarSet> canonical_splits(std::size_t n) {
  std::vector<VarSet> out;
  for (std::uint32_t bits = 1; bits + 1 < (1U << n); bits += 2) out.emplace_back(bits);
  return out;
}

}  // namespace

Order2Refutation refute_order2(const ExpPoly& f, std::size_t n, const GridBox& box) {
  if (n < 3) throw PreconditionViolation("refute_order2 needs n >= 3");
  if (n > 16) throw PreconditionViolation("refute_order2 supports at most 16 variables");
  if (box.dim() != f.dim()) throw DimensionMismatch(f.dim(), box.dim());
  const MultiExpPoly F = MultiExpPoly::of_sum(f, n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> rank_cache;
  auto restricted_rank = [&](std::size_t j, std::size_t k) {
    auto it = rank_cache.find({j, k});
    if (it != rank_cache.end()) return it->second;
    std::map<std::size_t, GroupElem> fixed;
    for (std::size_t b = 0; b < n; ++b) {
      if (b != j && b != k) fixed.emplace(b, GroupElem::zero(f.dim()));
    }
    const std::size_t r = bivariate_rank(F.restrict(fixed), box).rank;
    rank_cache.emplace(std::make_pair(j, k), r);
    return r;
  };

  Order2Refutation out;
  out.refuted = true;
  const auto splits = canonical_splits(n);
  for (const auto& E1 : splits) {
    for (const auto& E2 : splits) {
      const auto [j, k] = find_separated_pair(E1, E2, n);
      const std::size_t r = restricted_rank(j, k);
      out.entries.push_back(RefutationEntry{E1, E2, j, k, r});
      if (r <= 2) out.refuted = false;
    }
  }
  return out;
}

std::vector<Exponential> exponentials_in_span(const std::vector<GridFunction>& basis,
                                              const std::vector<Exponential>& candidates, const GridBox& box) {
  std::vector<Exponential> out;
  if (basis.empty()) return out;
  SpanBasis span(box.volume());
  for (const auto& g : basis) {
    if (!(g.box == box)) throw PreconditionViolation("basis function sampled on a different box");
    span.add(g.values);
  }
  for (const auto& m : candidates) {
    if (m.dim() != box.dim()) throw DimensionMismatch(box.dim(), m.dim());
    if (span.contains(sample(ExpPoly::from_exponential(m), box).values)) out.push_back(m);
  }
  return out;
}

GridBox default_box(const ExpPoly& f) {
  const std::int64_t hi = std::max<std::int64_t>(1, f.degree() + 1);
  return GridBox::cube(f.dim(), 0, hi);
}

OrderBounds min_order_bounds(const ExpPoly& f, std::size_t n, const GridBox& box, std::size_t k_max,
                             std::uint64_t seed) {
  if (n < 2) throw PreconditionViolation("min_order_bounds needs n >= 2");
  if (n > 16) throw PreconditionViolation("min_order_bounds supports at most 16 variables");
  if (k_max > 6) throw PreconditionViolation("k_max is capped at 6");
  if (box.dim() != f.dim()) throw DimensionMismatch(f.dim(), box.dim());

  OrderBounds b;
  if (f.is_zero()) {
    b.lower_route = b.upper_route = "zero function";
    b.flags.push_back("EXACT");
    return b;
  }

  // Upper: explicit witnesses.
  b.upper = static_cast<std::size_t>(-1);
  if (static_cast<int>(n) > f.max_poly_degree()) {
    b.upper = decompose_sum(f, n).order();
    b.upper_route = "decompose_sum";
  }
  const MultiExpPoly F = MultiExpPoly::of_sum(f, n);
  for (const auto& A : canonical_splits(n)) {
    const std::size_t r = separate(F, A).size();
    if (r < b.upper) {
      b.upper = r;
      b.upper_route = "separation across " + A.to_string();
    }
  }

  // Lower: certified routes.
  b.lower = 1;
  b.lower_route = "nonzero";
  if (static_cast<std::size_t>(f.degree()) > b.lower) {
    b.lower = static_cast<std::size_t>(f.degree());
    b.lower_route = "degree (deg f <= order)";
  }
  if (n == 2) {
    b.rank_certificate = sum_rank(f, box);
    if (b.rank_certificate->rank > b.lower) {
      b.lower = b.rank_certificate->rank;
      b.lower_route = "sum_rank";
    } else if (b.rank_certificate->rank == b.lower && b.lower_route == "nonzero") {
      b.lower_route = "sum_rank";
    }
  } else {
    b.refutation = refute_order2(f, n, box);
    if (b.refutation->refuted && b.lower < 3) {
      b.lower = 3;
      b.lower_route = "refute_order2";
    }
  }
  if (b.lower > b.upper) throw std::logic_error("order bounds crossed: internal inconsistency");

  if (b.lower < b.upper) {
    b.heuristic = heuristic_order_search(f, n, 1, k_max, seed);
    if (b.heuristic.attempted) b.flags.push_back("HEURISTIC");
    b.flags.push_back("OPEN");
    if (b.heuristic.attempted && !b.heuristic.feasible_order) b.flags.push_back("KMAX_EXCEEDED");
  } else {
    b.flags.push_back("EXACT");
  }
  return b;
}

}  // namespace expoly
