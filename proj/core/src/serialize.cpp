#include "expoly/serialize.hpp"

#include <map>
#include <sstream>

#include "expoly/errors.hpp"

namespace expoly {

namespace {

mpq_class rational_from_json(const Json& j, const char* what) {
  try {
    if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()), 10);
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
  throw MalformedInput(std::string(what) + " must be a string \"p/q\" or an integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw MalformedInput(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw MalformedInput(std::string("field '") + key + "' must be an array");
  return v;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = line.find(sep, start);
    std::string cell(line.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.back()))) cell.pop_back();
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front()))) cell.erase(0, 1);
    out.push_back(std::move(cell));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::int64_t integer_cell(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw MalformedInput("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

Json to_json(const Scalar& s) {
  return Json{{"re", rational_to_string(s.re())}, {"im", rational_to_string(s.im())}};
}

Json to_json(const ExpPoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json lambda = Json::array();
    for (const auto& l : t.exp.lambda()) lambda.push_back(to_json(l));
    Json poly = Json::array();
    for (const auto& [e, c] : ordered_terms(t.poly)) poly.push_back(Json{{"exps", e}, {"coef", to_json(c)}});
    terms.push_back(Json{{"lambda", std::move(lambda)}, {"poly", std::move(poly)}});
  }
  return Json{{"d", f.dim()}, {"terms", std::move(terms)}};
}

Json to_json(const DecompWitness& w) {
  Json terms = Json::array();
  for (const auto& t : w.terms) {
    terms.push_back(Json{{"E", t.E.one_based()}, {"u", to_json(t.u.function())}, {"v", to_json(t.v.function())}});
  }
  Json out{{"n", w.n}, {"d", w.d}, {"order", w.order()}, {"terms", std::move(terms)}};
  if (!w.flagged.empty()) out["flagged"] = w.flagged;
  return out;
}

Json to_json(const RankCertificate& c) {
  return Json{{"rank", c.rank}, {"pivot_rows", c.pivot_rows}, {"pivot_cols", c.pivot_cols}};
}

Json to_json(const Order2Refutation& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"E1", e.E1.one_based()}, {"E2", e.E2.one_based()}, {"pair", {e.j + 1, e.k + 1}}, {"rank", e.rank}});
  }
  return Json{{"refuted", r.refuted}, {"entries", std::move(entries)}};
}

Json to_json(const OrderBounds& b) {
  Json out{{"lower", b.lower}, {"upper", b.upper}, {"lower_route", b.lower_route}, {"upper_route", b.upper_route}};
  if (b.rank_certificate) out["rank_certificate"] = to_json(*b.rank_certificate);
  if (b.refutation) {
    std::size_t min_rank = static_cast<std::size_t>(-1);
    for (const auto& e : b.refutation->entries) min_rank = std::min(min_rank, e.rank);
    out["refutation"] = Json{{"refuted", b.refutation->refuted},
                             {"pairs_checked", b.refutation->entries.size()},
                             {"min_restricted_rank", b.refutation->entries.empty() ? 0 : min_rank}};
  }
  if (b.heuristic.attempted || !b.heuristic.note.empty()) {
    Json h{{"attempted", b.heuristic.attempted}, {"note", b.heuristic.note}};
    if (b.heuristic.attempted) {
      h["box"] = b.heuristic.box.to_string();
      h["feasible_order"] = b.heuristic.feasible_order ? Json(*b.heuristic.feasible_order) : Json(nullptr);
      std::ostringstream res;
      res.precision(3);
      res << std::scientific << b.heuristic.best_residual;
      h["best_residual"] = res.str();
    }
    out["heuristic"] = std::move(h);
  }
  out["flags"] = b.flags;
  return out;
}

Json to_json(const VerifyReport& r) {
  return Json{{"ok", r.ok},
              {"identity_ok", r.identity_ok},
              {"dependence_ok", r.dependence_ok},
              {"violations", r.violations},
              {"residual", r.residual.to_string()}};
}

Json to_json(const GridBox& box) { return Json{{"lo", box.lo()}, {"hi", box.hi()}}; }

Scalar scalar_from_json(const Json& j) {
  if (!j.is_object()) throw MalformedInput("scalar must be an object {\"re\": ..., \"im\": ...}");
  const mpq_class re = rational_from_json(field(j, "re"), "re");
  const mpq_class im = j.contains("im") ? rational_from_json(j.at("im"), "im") : mpq_class(0);
  return Scalar(re, im);
}

ExpPoly exppoly_from_json(const Json& j) {
  const std::size_t d = size_field(j, "d");
  if (d == 0) throw MalformedInput("dimension must be positive");
  std::vector<RawTerm> raw;
  for (const auto& t : array_field(j, "terms")) {
    std::vector<Scalar> lambda;
    for (const auto& l : array_field(t, "lambda")) lambda.push_back(scalar_from_json(l));
    if (lambda.size() != d) throw DimensionMismatch(d, lambda.size());
    GenPoly p(d);
    for (const auto& mono : array_field(t, "poly")) {
      Exponents e;
      for (const auto& x : array_field(mono, "exps")) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 1000000) {
          throw MalformedInput("exponents must be non-negative integers");
        }
        e.push_back(x.get<std::uint32_t>());
      }
      if (e.size() != d) throw DimensionMismatch(d, e.size());
      p.add_term(e, scalar_from_json(field(mono, "coef")));
    }
    raw.push_back(RawTerm{std::move(lambda), std::move(p)});
  }
  return ExpPoly::canonicalize(d, std::move(raw));
}

DecompWitness witness_from_json(const Json& j) {
  DecompWitness w;
  w.n = size_field(j, "n");
  w.d = size_field(j, "d");
  if (w.n < 2 || w.n > 32) throw MalformedInput("witness n must lie in 2..32");
  if (w.d == 0) throw MalformedInput("witness d must be positive");
  for (const auto& t : array_field(j, "terms")) {
    std::vector<int> idx;
    for (const auto& x : array_field(t, "E")) {
      if (!x.is_number_integer()) throw MalformedInput("E must list variable indices");
      idx.push_back(x.get<int>());
    }
    for (int k : idx) {
      if (k < 1 || static_cast<std::size_t>(k) > w.n) throw MalformedInput("E index " + std::to_string(k) + " out of range");
    }
    const VarSet E = VarSet::from_one_based(idx);
    MultiExpPoly u(w.n, w.d, exppoly_from_json(field(t, "u")));
    MultiExpPoly v(w.n, w.d, exppoly_from_json(field(t, "v")));
    w.terms.push_back(DecompTerm{E, std::move(u), std::move(v)});
  }
  return w;
}

std::string to_csv(const GridFunction& g) {
  std::string out = std::to_string(g.box.dim());
  for (auto v : g.box.lo()) out += "," + std::to_string(v);
  for (auto v : g.box.hi()) out += "," + std::to_string(v);
  out += "\n";
  const auto pts = g.box.points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (auto c : pts[k].coords) out += std::to_string(c) + ",";
    out += rational_to_string(g.values[k].re()) + "," + rational_to_string(g.values[k].im()) + "\n";
  }
  return out;
}

GridFunction grid_from_csv(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw MalformedInput("empty grid file");
  std::size_t at = 0;
  if (!lines[0].empty() && std::isalpha(static_cast<unsigned char>(lines[0].front()))) ++at;
  if (at >= lines.size()) throw MalformedInput("grid file has no header values");
  const auto header = split(lines[at], ',');
  const std::int64_t d = integer_cell(header[0], at + 1);
  if (d < 1 || static_cast<std::size_t>(2 * d + 1) != header.size()) {
    throw MalformedInput("header must read d,lo_1..lo_d,hi_1..hi_d");
  }
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  for (std::int64_t j = 0; j < d; ++j) {
    lo.push_back(integer_cell(header[static_cast<std::size_t>(1 + j)], at + 1));
    hi.push_back(integer_cell(header[static_cast<std::size_t>(1 + d + j)], at + 1));
  }
  GridBox box(lo, hi);
  const auto pts = box.points();
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t k = 0; k < pts.size(); ++k) index.emplace(pts[k].coords, k);

  GridFunction g{box, std::vector<Scalar>(pts.size())};
  std::vector<bool> seen(pts.size(), false);
  for (std::size_t l = at + 1; l < lines.size(); ++l) {
    const auto cells = split(lines[l], ',');
    if (cells.size() != static_cast<std::size_t>(d) + 2) {
      throw MalformedInput("line " + std::to_string(l + 1) + ": expected " + std::to_string(d + 2) + " fields");
    }
    std::vector<std::int64_t> x;
    for (std::int64_t j = 0; j < d; ++j) x.push_back(integer_cell(cells[static_cast<std::size_t>(j)], l + 1));
    const auto it = index.find(x);
    if (it == index.end()) throw MalformedInput("line " + std::to_string(l + 1) + ": point outside the box");
    if (seen[it->second]) throw MalformedInput("line " + std::to_string(l + 1) + ": duplicate point");
    seen[it->second] = true;
    try {
      g.values[it->second] = Scalar(parse_rational(cells[static_cast<std::size_t>(d)]),
                                    parse_rational(cells[static_cast<std::size_t>(d) + 1]));
    } catch (const std::invalid_argument& e) {
      throw MalformedInput("line " + std::to_string(l + 1) + ": " + e.what());
    }
  }
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!seen[k]) throw MalformedInput("grid file is missing the point " + GridBox(pts[k].coords, pts[k].coords).to_string());
  }
  return g;
}

}  // namespace expoly
