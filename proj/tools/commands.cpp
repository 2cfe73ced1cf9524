#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "expoly/decompose.hpp"
#include "expoly/diffops.hpp"
#include "expoly/errors.hpp"
#include "expoly/gridlab.hpp"
#include "expoly/selftest.hpp"
#include "expoly/text.hpp"

namespace expoly::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Splits on commas outside parentheses.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back();
      continue;
    }
    out.back() += c;
  }
  return out;
}

GroupElem parse_step(const std::string& text, std::size_t d) {
  std::vector<std::int64_t> coords;
  for (const auto& part : split_top_level(text)) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || part.find_first_not_of(" \t", used) != std::string::npos) {
      throw UsageError("step '" + text + "' must be a comma-separated integer vector");
    }
    coords.push_back(v);
  }
  if (coords.size() != d) throw DimensionMismatch(d, coords.size());
  return GroupElem(std::move(coords));
}

class Session {
 public:
  Session(const RunOptions& o, RunReport& r) : opt_(o), rep_(r) {}

  ExpPoly expr() {
    if (!opt_.expr) throw UsageError(rep_.command + " needs --expr");
    ExpPoly f = parse_expr(*opt_.expr, opt_.dim);
    digest_ += "expr:" + f.to_string() + "\n";
    return f;
  }

  std::size_t n() const {
    if (!opt_.n) throw UsageError(rep_.command + " needs --n");
    return *opt_.n;
  }

  GridBox box_for(const ExpPoly& f) {
    GridBox b = opt_.box ? parse_box(*opt_.box) : default_box(f);
    if (b.dim() != f.dim()) throw DimensionMismatch(f.dim(), b.dim());
    digest_ += "box:" + b.to_string() + "\n";
    return b;
  }

  std::vector<GroupElem> steps(std::size_t d, std::size_t count) {
    std::vector<GroupElem> out;
    for (const auto& s : opt_.steps) out.push_back(parse_step(s, d));
    if (out.empty()) out.push_back(GroupElem::unit(d, 0));
    while (out.size() < count) out.push_back(out.back());
    for (const auto& h : out) digest_ += "step:" + Json(h.coords).dump() + "\n";
    return out;
  }

  std::string& digest() { return digest_; }

 private:
  const RunOptions& opt_;
  RunReport& rep_;
  std::string digest_;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

void cmd_degree(Session& s, RunReport& r) {
  const ExpPoly f = s.expr();
  r.result = Json{{"expr", f.to_string()}, {"degree", f.degree()}};
  r.text = std::to_string(f.degree());
}

void cmd_spectrum(Session& s, RunReport& r) {
  const ExpPoly f = s.expr();
  Json sp = Json::array();
  for (const auto& m : f.spectrum()) {
    r.text += m.to_string() + "\n";
    sp.push_back(m.to_string());
  }
  r.result = Json{{"expr", f.to_string()}, {"spectrum", std::move(sp)}};
  if (!r.text.empty()) r.text.pop_back();
}

void cmd_delta(Session& s, const RunOptions& o, RunReport& r, bool modified) {
  const ExpPoly f = s.expr();
  const GroupElem h = s.steps(f.dim(), 1).front();
  if (o.power == 0) throw PreconditionViolation("power must be positive");
  std::optional<Exponential> m;
  if (modified) {
    if (!o.lambda) throw UsageError("mdelta needs --m");
    std::vector<Scalar> lambda;
    for (const auto& part : split_top_level(*o.lambda)) lambda.push_back(parse_scalar(part));
    if (lambda.size() != f.dim()) throw DimensionMismatch(f.dim(), lambda.size());
    for (const auto& l : lambda) {
      if (l.is_zero()) throw MalformedInput("exponential component is zero");
    }
    m = Exponential(std::move(lambda));
    s.digest() += "m:" + m->to_string() + "\n";
  }
  ExpPoly g = f;
  for (unsigned k = 0; k < o.power; ++k) g = modified ? mdelta(g, *m, h) : delta(g, h);
  r.result = Json{{"expr", f.to_string()}, {"result", g.to_string()}, {"json", to_json(g)}};
  r.text = g.to_string();
}

void cmd_annihilate(Session& s, RunReport& r) {
  const ExpPoly f = s.expr();
  const auto steps = s.steps(f.dim(), f.terms().size());
  const DiffOpWord w = annihilator_for(f, std::span<const GroupElem>(steps.data(), f.terms().size()));
  const ExpPoly g = apply_word(f, w);
  r.result = Json{{"expr", f.to_string()}, {"word", w.to_string()}, {"annihilated", g.is_zero()}};
  r.text = w.to_string() + "\nannihilated: " + bool_text(g.is_zero());
  if (!g.is_zero()) r.exit_code = kCheckFailed;
}

void verify_into(const ExpPoly& f, const DecompWitness& w, RunReport& r) {
  const VerifyReport v = verify_witness(f, w);
  r.result["verify"] = to_json(v);
  r.text += "\nverify: " + bool_text(v.ok);
  for (const auto& msg : v.violations) r.text += "\n  " + msg;
  if (!v.ok) r.exit_code = kCheckFailed;
}

void cmd_decompose(Session& s, const RunOptions& o, RunReport& r) {
  const ExpPoly f = s.expr();
  const std::size_t n = s.n();
  s.digest() += "n:" + std::to_string(n) + "\n";
  const DecompWitness w = decompose_sum(f, n);
  r.result = Json{{"expr", f.to_string()}, {"witness", to_json(w)}};
  r.text = to_json(w).dump(2);
  if (o.verify) verify_into(f, w, r);
}

void cmd_verify(Session& s, const RunOptions& o, RunReport& r) {
  const ExpPoly f = s.expr();
  if (!o.witness) throw UsageError("verify needs --witness <file>");
  const std::string text = read_file(*o.witness);
  s.digest() += "witness:" + text + "\n";
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("witness is not valid JSON: ") + e.what());
  }
  const DecompWitness w = witness_from_json(j);
  r.result = Json{{"expr", f.to_string()}, {"order", w.order()}};
  r.text = "order: " + std::to_string(w.order());
  verify_into(f, w, r);
}

void cmd_rank(Session& s, RunReport& r) {
  const ExpPoly f = s.expr();
  const GridBox box = s.box_for(f);
  const RankCertificate c = sum_rank(f, box);
  r.result = Json{{"expr", f.to_string()}, {"box", box.to_string()}, {"certificate", to_json(c)}};
  r.text = "rank " + std::to_string(c.rank);
}

void cmd_bounds(Session& s, const RunOptions& o, RunReport& r) {
  const ExpPoly f = s.expr();
  const std::size_t n = s.n();
  const GridBox box = s.box_for(f);
  s.digest() += "n:" + std::to_string(n) + "\nkmax:" + std::to_string(o.kmax) + "\n";
  const OrderBounds b = min_order_bounds(f, n, box, o.kmax, o.seed);
  r.result = Json{{"expr", f.to_string()}, {"n", n}, {"box", box.to_string()}, {"kmax", o.kmax}, {"bounds", to_json(b)}};
  r.flags = b.flags;
  r.text = std::to_string(b.lower) + " <= order <= " + std::to_string(b.upper) + "  (lower: " + b.lower_route +
           "; upper: " + b.upper_route + ")";
  if (b.heuristic.attempted) {
    r.text += "\nheuristic: " + b.heuristic.note;
  }
}

void cmd_refute2(Session& s, RunReport& r) {
  const ExpPoly f = s.expr();
  const std::size_t n = s.n();
  const GridBox box = s.box_for(f);
  s.digest() += "n:" + std::to_string(n) + "\n";
  const Order2Refutation ref = refute_order2(f, n, box);
  r.result = Json{{"expr", f.to_string()}, {"n", n}, {"box", box.to_string()}, {"refutation", to_json(ref)}};
  std::size_t lowest = static_cast<std::size_t>(-1);
  for (const auto& e : ref.entries) lowest = std::min(lowest, e.rank);
  r.text = ref.refuted ? "refuted: every pair of splits forces restricted rank >= " + std::to_string(lowest)
                       : "inconclusive: some restricted rank is " + std::to_string(lowest) + " <= 2";
}

void cmd_reconstruct(Session& s, const RunOptions& o, RunReport& r) {
  if (!o.csv) throw UsageError("reconstruct needs --csv <file>");
  const std::string text = read_file(*o.csv);
  s.digest() += "csv:" + text;
  const GridFunction g = grid_from_csv(text);
  const Reconstruction rec = reconstruct_gep(g);
  Json roots = Json::array();
  for (const auto& [root, mult] : rec.roots) roots.push_back(Json{{"root", to_json(root)}, {"multiplicity", mult}});
  r.result = Json{{"box", g.box.to_string()},
                  {"order", rec.order},
                  {"characteristic", rec.characteristic.to_string()},
                  {"roots", std::move(roots)},
                  {"expr", rec.f.to_string()},
                  {"degree", rec.f.degree()},
                  {"json", to_json(rec.f)}};
  r.text = rec.f.to_string() + "\norder: " + std::to_string(rec.order) +
           "\ncharacteristic: " + rec.characteristic.to_string();
}

void cmd_selftest(Session& s, const RunOptions& o, RunReport& r) {
  s.digest() += "seed:" + std::to_string(o.seed) + "\n";
  const auto results = run_selftest(o.seed);
  r.result = selftest_report(o.seed, results);
  for (const auto& c : results) {
    r.text += std::string(c.passed ? "PASS" : "FAIL") + "  " + std::to_string(c.id) + "  " + c.name + "\n";
  }
  const bool all = r.result.at("passed").get<bool>();
  r.text += all ? "all criteria passed" : "some criteria failed";
  if (!all) r.exit_code = kCheckFailed;
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json RunReport::to_json() const {
  Json out{{"command", command}, {"args", args}, {"seed", seed}, {"input_digest", input_digest}};
  if (error.empty()) {
    out["result"] = result;
  } else {
    out["error"] = error;
  }
  out["flags"] = flags;
  out["exit_code"] = exit_code;
  return out;
}

RunReport run(const std::string& command, const RunOptions& options, std::vector<std::string> args) {
  RunReport r;
  r.command = command;
  r.args = std::move(args);
  r.seed = options.seed;
  r.flags = {"EXACT"};
  const auto start = std::chrono::steady_clock::now();
  Session s(options, r);
  try {
    if (command == "degree") {
      cmd_degree(s, r);
    } else if (command == "spectrum") {
      cmd_spectrum(s, r);
    } else if (command == "delta" || command == "mdelta") {
      cmd_delta(s, options, r, command == "mdelta");
    } else if (command == "annihilate") {
      cmd_annihilate(s, r);
    } else if (command == "decompose") {
      cmd_decompose(s, options, r);
    } else if (command == "verify") {
      cmd_verify(s, options, r);
    } else if (command == "rank") {
      cmd_rank(s, r);
    } else if (command == "bounds") {
      cmd_bounds(s, options, r);
    } else if (command == "refute2") {
      cmd_refute2(s, r);
    } else if (command == "reconstruct") {
      cmd_reconstruct(s, options, r);
    } else if (command == "selftest") {
      cmd_selftest(s, options, r);
    } else {
      throw UsageError("unknown command '" + command + "'");
    }
  } catch (const UsageError& e) {
    r.error = e.what();
    r.exit_code = kUsage;
  } catch (const ParseError& e) {
    r.error = std::string("parse error: ") + e.what();
    r.exit_code = kUsage;
  } catch (const ReconstructionError& e) {
    r.error = e.what();
    r.exit_code = kModuleError;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.exit_code = kModuleError;
  }
  if (!r.error.empty()) r.flags.clear();
  r.input_digest = fnv1a_hex(s.digest());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace expoly::cli
