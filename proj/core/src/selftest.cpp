#include "expoly/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "expoly/battery.hpp"
#include "expoly/combination.hpp"
#include "expoly/decompose.hpp"
#include "expoly/diffops.hpp"

namespace expoly {

namespace {

constexpr std::uint64_t kMix = 0x9E3779B97F4A7C15ULL;

std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) { return seed * kMix + salt; }

/// Shared battery for the annihilation, order-law and round-trip criteria.
std::vector<ExpPoly> main_battery(std::uint64_t seed) {
  return make_battery(derive(seed, 1), 50, BatterySpec{1, 3, 3, false}, true);
}

bool is_identity_in(const ExpPoly& f) { return f.has_identity_in_spectrum(); }

std::size_t expected_order(const ExpPoly& f) {
  return static_cast<std::size_t>(f.degree()) + (is_identity_in(f) ? 1 : 0);
}

/// x -> f restricted to coordinate axis j (other coordinates 0).
ExpPoly axis_restriction(const ExpPoly& f, std::size_t j) {
  AffineMap map;
  map.in_dim = 1;
  map.offset.assign(f.dim(), 0);
  map.matrix.assign(f.dim(), std::vector<std::int64_t>(1, 0));
  map.matrix[j][0] = 1;
  return pullback(f, map);
}

/// Wide enough that the half window already pins down a recurrence of order deg g + 1.
std::int64_t reconstruction_window(const ExpPoly& g) { return 4 * (std::max(g.degree(), 0) + 1) + 2; }

CriterionResult annihilation(std::uint64_t seed) {
  CriterionResult r{1, "annihilation", true, {}, 0};
  const auto battery = main_battery(seed);
  Rng rng(derive(seed, 11));
  std::size_t words = 0;
  std::size_t failures = 0;
  std::size_t converse_failures = 0;
  for (const auto& f : battery) {
    bool perturbed_survives = false;
    // f + t_1^{n_1} m_1 escapes the annihilator built from f's shape
    const auto& first = f.terms().front();
    Exponents top(f.dim(), 0);
    top[0] = static_cast<std::uint32_t>(first.poly.degree() + 1);
    const ExpPoly perturbed = f + ExpPoly::term(GenPoly::monomial(top, Scalar(1)), first.exp);
    for (int a = 0; a < 5; ++a) {
      std::vector<GroupElem> steps;
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        steps.push_back(a == 0 ? GroupElem::unit(f.dim(), 0) : random_step(rng, f.dim()));
      }
      const DiffOpWord w = annihilator_for(f, steps);
      ++words;
      if (!apply_word(f, w).is_zero()) ++failures;
      if (!apply_word(perturbed, w).is_zero()) perturbed_survives = true;
    }
    if (!perturbed_survives) ++converse_failures;
  }
  r.passed = failures == 0 && converse_failures == 0;
  r.detail = Json{{"functions", battery.size()},
                  {"words", words},
                  {"nonzero_results", failures},
                  {"perturbations_not_detected", converse_failures}};
  return r;
}

CriterionResult order_law(std::uint64_t seed) {
  CriterionResult r{2, "decomposition order law", true, {}, 0};
  const auto battery = main_battery(seed);
  std::size_t witnesses = 0;
  std::size_t wrong_order = 0;
  std::size_t failed_verify = 0;
  for (const auto& f : battery) {
    const auto n0 = static_cast<std::size_t>(std::max(f.max_poly_degree(), 1));
    for (std::size_t n = n0 + 1; n <= 5; ++n) {
      const auto w = decompose_sum(f, n);
      ++witnesses;
      if (w.order() != expected_order(f)) ++wrong_order;
      if (!verify_witness(f, w).ok) ++failed_verify;
    }
  }
  r.passed = witnesses > 0 && wrong_order == 0 && failed_verify == 0;
  r.detail = Json{{"functions", battery.size()},
                  {"witnesses", witnesses},
                  {"wrong_order", wrong_order},
                  {"failed_verification", failed_verify}};
  return r;
}

CriterionResult rank_and_reconstruction(std::uint64_t seed) {
  CriterionResult r{3, "sum rank and reconstruction at n = 2", true, {}, 0};
  const auto battery = make_battery(derive(seed, 3), 30, BatterySpec{1, 3, 3, true}, false);
  std::size_t degree_above_rank = 0;
  std::size_t unstable = 0;
  std::size_t mismatched = 0;
  std::size_t rank_below_reconstruction = 0;
  for (const auto& f : battery) {
    const std::int64_t side = f.degree() + 1;
    const auto r1 = sum_rank(f, GridBox::cube(1, 0, side)).rank;
    const auto r2 = sum_rank(f, GridBox::cube(1, 0, side + 1)).rank;
    if (r1 != r2) ++unstable;
    if (static_cast<std::size_t>(f.degree()) > r1) ++degree_above_rank;
    try {
      const auto rec = reconstruct_gep(sample(f, GridBox::cube(1, 0, reconstruction_window(f))));
      if (!(rec.f == f)) ++mismatched;
      if (static_cast<std::size_t>(std::max(rec.f.degree(), 0)) > r1) ++rank_below_reconstruction;
    } catch (const ReconstructionError&) {
      ++mismatched;
    }
  }
  r.passed = degree_above_rank == 0 && unstable == 0 && mismatched == 0 && rank_below_reconstruction == 0;
  r.detail = Json{{"functions", battery.size()},
                  {"degree_above_rank", degree_above_rank},
                  {"rank_not_stable", unstable},
                  {"reconstruction_mismatch", mismatched},
                  {"reconstruction_degree_above_rank", rank_below_reconstruction}};
  return r;
}

CriterionResult round_trip(std::uint64_t seed) {
  CriterionResult r{4, "witness order bounds reconstructed degree", true, {}, 0};
  const auto battery = main_battery(seed);
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t failures = 0;
  for (const auto& f : battery) {
    const auto n = static_cast<std::size_t>(std::max(f.max_poly_degree(), 1)) + 1;
    const std::size_t k = decompose_sum(f, n).order();
    std::vector<ExpPoly> lines;
    if (f.dim() == 1) {
      lines.push_back(f);
    } else {
      for (std::size_t j = 0; j < f.dim(); ++j) lines.push_back(axis_restriction(f, j));
    }
    for (const auto& g : lines) {
      ++checks;
      try {
        const auto rec = reconstruct_gep(sample(g, GridBox::cube(1, 0, reconstruction_window(g))));
        if (!(rec.f == g)) ++failures;
        if (rec.f.degree() > static_cast<int>(k)) ++violations;
      } catch (const ReconstructionError&) {
        ++failures;
      }
    }
  }
  r.passed = violations == 0 && failures == 0;
  r.detail = Json{{"functions", battery.size()},
                  {"reconstructions", checks},
                  {"order_below_degree", violations},
                  {"reconstruction_failures", failures}};
  return r;
}

CriterionResult counterexample(std::uint64_t) {
  CriterionResult r{5, "sum of squares counterexample", true, {}, 0};
  Json ranks = Json::array();
  bool ranks_ok = true;
  for (std::size_t N = 2; N <= 5; ++N) {
    const auto rank = sum_rank(sum_of_squares(N), GridBox::cube(N, 0, 2)).rank;
    ranks.push_back(Json{{"N", N}, {"rank", rank}});
    ranks_ok = ranks_ok && rank == N + 2;
  }
  const auto refutation = refute_order2(sum_of_squares(2), 3, GridBox::cube(2, 0, 2));
  bool refutation_ok = refutation.refuted;
  for (const auto& e : refutation.entries) refutation_ok = refutation_ok && e.rank == 4;

  std::size_t pairs_checked = 0;
  std::size_t pair_errors = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    const std::uint32_t full = (1U << n) - 1U;
    for (std::uint32_t a = 1; a < full; ++a) {
      for (std::uint32_t b = 1; b < full; ++b) {
        const VarSet E1(a);
        const VarSet E2(b);
        std::pair<std::size_t, std::size_t> expected{n, n};
        for (std::size_t j = 0; j < n && expected.first == n; ++j) {
          for (std::size_t k = j + 1; k < n; ++k) {
            if (E1.contains(j) != E1.contains(k) && E2.contains(j) != E2.contains(k)) {
              expected = {j, k};
              break;
            }
          }
        }
        ++pairs_checked;
        if (expected.first == n || find_separated_pair(E1, E2, n) != expected) ++pair_errors;
      }
    }
  }
  r.passed = ranks_ok && refutation_ok && pair_errors == 0;
  r.detail = Json{{"sum_ranks", std::move(ranks)},
                  {"order2_refuted", refutation.refuted},
                  {"refutation_pairs", refutation.entries.size()},
                  {"separated_pairs_checked", pairs_checked},
                  {"separated_pair_errors", pair_errors}};
  return r;
}

CriterionResult difference_identities(std::uint64_t seed) {
  CriterionResult r{6, "modified difference identities and degree drop", true, {}, 0};
  Rng rng(derive(seed, 6));
  std::size_t e2_failures = 0;
  std::size_t drop_failures = 0;
  constexpr int kInstances = 100;
  for (int k = 0; k < kInstances; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const GenPoly g = random_genpoly(rng, d, 4);
    const Exponential m = random_exponential(rng, d, false);
    const GroupElem h = random_step(rng, d);
    const auto n = static_cast<unsigned>(rng.uniform(1, 3));
    ExpPoly lhs = ExpPoly::term(g, m);
    ExpPoly dg = ExpPoly::from_poly(g);
    for (unsigned j = 0; j < n; ++j) {
      lhs = mdelta(lhs, m, h);
      dg = delta(dg, h);
    }
    const ExpPoly rhs = (dg * ExpPoly::from_exponential(m)).scaled(m.evaluate(h).pow(n));
    if (!(lhs == rhs)) ++e2_failures;
  }
  for (int k = 0; k < kInstances; ++k) {
    const std::size_t d = 1 + static_cast<std::size_t>(k % 2);
    const GenPoly p = random_genpoly_of_degree(rng, d, static_cast<unsigned>(rng.uniform(0, 4)));
    const Exponential mi = random_exponential(rng, d, false);
    const Exponential m = rng.coin() ? mi : random_exponential(rng, d, false);
    const ExpPoly out = mdelta(ExpPoly::term(p, mi), m, random_step(rng, d));
    if (out.is_zero()) continue;
    const bool shape_ok = out.terms().size() == 1 && out.terms().front().exp == mi;
    const int dq = shape_ok ? out.terms().front().poly.degree() : 1 << 20;
    if (!shape_ok || dq > p.degree() || (m == mi && dq >= p.degree())) ++drop_failures;
  }
  r.passed = e2_failures == 0 && drop_failures == 0;
  r.detail = Json{{"identity_instances", kInstances},
                  {"identity_failures", e2_failures},
                  {"degree_drop_instances", kInstances},
                  {"degree_drop_failures", drop_failures}};
  return r;
}

CriterionResult span_bound(std::uint64_t seed) {
  CriterionResult r{7, "exponentials in W + V", true, {}, 0};
  Rng rng(derive(seed, 7));
  const GridBox box = GridBox::cube(1, 0, 40);
  std::size_t violations = 0;
  Json counts = Json::array();
  for (int inst = 0; inst < 20; ++inst) {
    // pool of 20 distinct exponentials
    std::vector<Exponential> pool;
    while (pool.size() < 20) {
      const auto num = rng.nonzero(9);
      const auto den = rng.uniform(1, 3);
      Exponential m({Scalar::rational(num, den)});
      if (std::find(pool.begin(), pool.end(), m) == pool.end()) pool.push_back(std::move(m));
    }
    // V: span of x^l m_i (l < n_i) for a few pool members; its degree bound N
    const auto shapes = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<GridFunction> basis;
    int N = 0;
    bool has_identity = false;
    for (std::size_t i = 0; i < shapes; ++i) {
      const Exponential& m = pool[i];
      const auto ni = static_cast<unsigned>(rng.uniform(1, 3));
      N += static_cast<int>(ni);
      has_identity = has_identity || m.is_identity();
      for (unsigned l = 0; l < ni; ++l) {
        basis.push_back(sample(ExpPoly::term(GenPoly::monomial({l}, Scalar(1)), m), box));
      }
    }
    if (has_identity) --N;
    // W: some pool exponentials, mixtures, and random vectors
    const auto nw = static_cast<std::size_t>(rng.uniform(1, 4));
    for (std::size_t k = 0; k < nw; ++k) {
      GridFunction w{box, std::vector<Scalar>(box.volume())};
      const auto kind = rng.uniform(0, 2);
      if (kind == 0) {
        w = sample(ExpPoly::from_exponential(pool[static_cast<std::size_t>(rng.uniform(3, 19))]), box);
      } else if (kind == 1) {
        const ExpPoly mix = ExpPoly::from_exponential(pool[static_cast<std::size_t>(rng.uniform(3, 19))]) +
                            ExpPoly::from_exponential(pool[static_cast<std::size_t>(rng.uniform(3, 19))], Scalar(2));
        w = sample(mix, box);
      } else {
        for (auto& v : w.values) v = Scalar(rng.uniform(-50, 50));
      }
      basis.push_back(std::move(w));
    }
    const auto found = exponentials_in_span(basis, pool, box).size();
    counts.push_back(Json{{"n", nw}, {"N", N}, {"count", found}});
    if (found > nw + static_cast<std::size_t>(N) + 1) ++violations;
  }
  r.passed = violations == 0;
  r.detail = Json{{"instances", counts}, {"violations", violations}};
  return r;
}

/// Replays every seeded computation twice and compares the serialized output.
CriterionResult determinism(std::uint64_t seed) {
  CriterionResult r{8, "determinism", true, {}, 0};
  auto replay = [&] {
    Json out = Json::array();
    const auto battery = main_battery(seed);
    for (const auto& f : battery) out.push_back(f.to_string());
    const std::vector<ExpPoly> pair = {battery[0], battery[2].scaled(Scalar(-1))};
    const auto c = generic_combination(pair, derive(seed, 8));
    out.push_back(c.combined.to_string());
    const auto h = heuristic_order_search(sum_of_squares(1), 3, 1, 3, derive(seed, 8));
    out.push_back(h.feasible_order ? static_cast<int>(*h.feasible_order) : -1);
    return out.dump();
  };
  const std::string a = replay();
  const std::string b = replay();
  r.passed = a == b;
  r.detail = Json{{"replays_identical", r.passed}, {"bytes", a.size()}};
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = annihilation(seed); break;
    case 2: r = order_law(seed); break;
    case 3: r = rank_and_reconstruction(seed); break;
    case 4: r = round_trip(seed); break;
    case 5: r = counterexample(seed); break;
    case 6: r = difference_identities(seed); break;
    case 7: r = span_bound(seed); break;
    case 8: r = determinism(seed); break;
    default: throw std::out_of_range("no criterion " + std::to_string(id));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_selftest(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

Json selftest_report(std::uint64_t seed, const std::vector<CriterionResult>& results) {
  Json criteria = Json::array();
  bool all = true;
  for (const auto& c : results) {
    criteria.push_back(Json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all = all && c.passed;
  }
  return Json{{"seed", seed}, {"passed", all}, {"criteria", std::move(criteria)}};
}

}  // namespace expoly
