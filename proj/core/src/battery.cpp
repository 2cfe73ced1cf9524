#include "expoly/battery.hpp"

#include <algorithm>

namespace expoly {

namespace {

const std::vector<Scalar>& real_pool() {
  static const std::vector<Scalar> pool = {Scalar(1),  Scalar(2),  Scalar(3),  Scalar(-1),
                                           Scalar(-2), Scalar::rational(1, 2), Scalar::rational(1, 3),
                                           Scalar::rational(3, 2), Scalar::rational(-1, 2), Scalar(5)};
  return pool;
}

const std::vector<Scalar>& gaussian_pool() {
  static const std::vector<Scalar> pool = {Scalar::i(), Scalar::gaussian(1, 1), Scalar::gaussian(2, -1),
                                           Scalar(Scalar::rational(1, 2).re(), mpq_class(1, 2))};
  return pool;
}

}  // namespace

Scalar random_coefficient(Rng& rng) {
  const auto p = rng.nonzero(5);
  if (rng.uniform(0, 3) == 0) return Scalar::rational(p, rng.uniform(2, 4));
  return Scalar(p);
}

GenPoly random_genpoly_of_degree(Rng& rng, std::size_t d, unsigned degree) {
  GenPoly p(d);
  while (p.degree() != static_cast<int>(degree)) {
    p = GenPoly(d);
    // one monomial of top degree plus a few lower ones
    const auto draw = [&](unsigned total) {
      Exponents e(d, 0);
      for (unsigned k = 0; k < total; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(d) - 1))];
      return e;
    };
    p.add_term(draw(degree), random_coefficient(rng));
    const auto extra = rng.uniform(0, 3);
    for (std::int64_t k = 0; k < extra; ++k) {
      p.add_term(draw(static_cast<unsigned>(rng.uniform(0, degree))), random_coefficient(rng));
    }
  }
  return p;
}

GenPoly random_genpoly(Rng& rng, std::size_t d, unsigned max_degree) {
  return random_genpoly_of_degree(rng, d, static_cast<unsigned>(rng.uniform(0, max_degree)));
}

Exponential random_exponential(Rng& rng, std::size_t d, bool real_spectrum) {
  std::vector<Scalar> lambda;
  for (std::size_t j = 0; j < d; ++j) {
    if (!real_spectrum && rng.uniform(0, 5) == 0) {
      const auto& pool = gaussian_pool();
      lambda.push_back(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))]);
    } else {
      const auto& pool = real_pool();
      lambda.push_back(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))]);
    }
  }
  return Exponential(std::move(lambda));
}

ExpPoly random_exppoly(Rng& rng, const BatterySpec& spec) {
  const auto count = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(spec.max_terms)));
  std::vector<Exponential> exps;
  // the identity exponential shows up often enough to exercise the -1 in the degree
  if (rng.uniform(0, 2) == 0) exps.push_back(Exponential::identity(spec.d));
  while (exps.size() < count) {
    auto m = random_exponential(rng, spec.d, spec.real_spectrum);
    if (std::find(exps.begin(), exps.end(), m) == exps.end()) exps.push_back(std::move(m));
  }
  std::vector<ExpTerm> terms;
  for (auto& m : exps) terms.push_back(ExpTerm{std::move(m), random_genpoly(rng, spec.d, spec.max_degree)});
  return ExpPoly::canonicalize(spec.d, std::move(terms));
}

GroupElem random_step(Rng& rng, std::size_t d) {
  GroupElem h = GroupElem::zero(d);
  const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(d) - 1));
  if (d > 1 && rng.coin()) {
    auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(d) - 2));
    if (k >= j) ++k;
    h.coords[j] = 1;
    h.coords[k] = 1;
    return h;
  }
  h.coords[j] = rng.coin() ? 1 : -1;
  return h;
}

std::vector<ExpPoly> make_battery(std::uint64_t seed, std::size_t count, BatterySpec spec, bool alternate_dims) {
  Rng rng(seed);
  std::vector<ExpPoly> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (alternate_dims) spec.d = 1 + k % 2;
    out.push_back(random_exppoly(rng, spec));
  }
  return out;
}

ExpPoly sum_of_squares(std::size_t N) {
  GenPoly q(N);
  for (std::size_t j = 0; j < N; ++j) {
    Exponents e(N, 0);
    e[j] = 2;
    q.add_term(e, Scalar(1));
  }
  return ExpPoly::from_poly(q);
}

}  // namespace expoly
