#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace expoly::cli;

  CLI::App app{"Exact exponential polynomials on Z^d: degrees, difference operators, decompositions, grid oracles"};
  std::string command;
  RunOptions opt;
  std::string out_path;
  bool json = false;
  bool timing = false;

  std::string command_list;
  for (const auto& c : kCommands) command_list += (command_list.empty() ? "" : "|") + c;
  app.add_option("command", command, command_list)->required()->check(CLI::IsMember(kCommands));
  app.add_option("--expr", opt.expr, "expression, e.g. \"(t1^2 + 3/2)*exp(2)\"");
  app.add_option("--csv", opt.csv, "grid CSV file (reconstruct)");
  app.add_option("--witness", opt.witness, "witness JSON file (verify)");
  app.add_option("--box", opt.box, "window lo..hi[,lo..hi...]");
  app.add_option("--n", opt.n, "number of variables x_1..x_n")->check(CLI::Range(1, 32));
  app.add_option("--kmax", opt.kmax, "largest order tried by the heuristic search")->check(CLI::Range(0, 6));
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--dim", opt.dim, "dimension d (default: inferred from the expression)")->check(CLI::Range(1, 64));
  app.add_option("--step", opt.steps, "step vector, e.g. 1 or 1,-1 (repeatable)");
  app.add_option("--m", opt.lambda, "exponential for mdelta, e.g. 2 or 2,1/3");
  app.add_option("--power", opt.power, "power of delta/mdelta")->check(CLI::Range(1, 64));
  app.add_flag("--verify", opt.verify, "verify the witness produced by decompose");
  app.add_option("--out", out_path, "also write the JSON report to this file");
  app.add_flag("--json", json, "print the JSON report instead of text");
  app.add_flag("--timing", timing, "print wall time to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  const RunReport report = run(command, opt, args);
  const std::string text = report.to_json().dump(2) + "\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kUsage;
    }
    out << text;
  }
  if (json) {
    std::cout << text;
  } else if (!report.error.empty()) {
    std::cerr << "error: " << report.error << "\n";
  } else {
    std::cout << report.text << "\n";
    if (!report.flags.empty()) {
      std::cout << "[";
      for (std::size_t k = 0; k < report.flags.size(); ++k) std::cout << (k ? " " : "") << report.flags[k];
      std::cout << "]\n";
    }
  }
  if (timing) std::cerr << "time: " << report.seconds << " s\n";
  return report.exit_code;
}
