#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "expoly/decompose.hpp"
#include "expoly/gridlab.hpp"
#include "expoly/text.hpp"

using namespace expoly;
using namespace expoly::cli;

namespace {

RunOptions with_expr(const std::string& e) {
  RunOptions o;
  o.expr = e;
  return o;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("expoly_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Run, DegreeAndSpectrum) {
  const auto r = run("degree", with_expr("t1*exp(2) + t1"));
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.text, "3");
  EXPECT_EQ(r.result["degree"], 3);
  EXPECT_EQ(r.flags, std::vector<std::string>{"EXACT"});

  const auto s = run("spectrum", with_expr("t1 + exp(2)"));
  EXPECT_EQ(s.result["spectrum"].size(), 2U);
}

TEST(Run, DeltaAndMdelta) {
  auto o = with_expr("t1^2");
  EXPECT_EQ(run("delta", o).text, "2*t1 + 1");
  o.power = 3;
  EXPECT_EQ(run("delta", o).text, "0");

  auto m = with_expr("t1*exp(2)");
  m.lambda = "2";
  EXPECT_EQ(run("mdelta", m).text, "2*exp(2)");
  m.lambda.reset();
  EXPECT_EQ(run("mdelta", m).exit_code, kUsage);
}

TEST(Run, Annihilate) {
  auto o = with_expr("t1*exp(2) + t1^2");
  o.steps = {"2"};
  const auto r = run("annihilate", o);
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_TRUE(r.result["annihilated"].get<bool>());
}

TEST(Run, DecomposeAndVerify) {
  auto o = with_expr("t1^2*exp(2) + 1");
  o.n = 3;
  o.verify = true;
  const auto d = run("decompose", o);
  ASSERT_EQ(d.exit_code, kOk) << d.error;
  EXPECT_EQ(d.result["witness"]["order"], 4);
  EXPECT_TRUE(d.result["verify"]["ok"].get<bool>());

  auto v = with_expr("t1^2*exp(2) + 1");
  v.witness = write_temp("witness.json", d.result["witness"].dump());
  EXPECT_EQ(run("verify", v).exit_code, kOk);

  // a valid witness for another function fails the check
  auto wrong = with_expr("t1^2*exp(2) + 2");
  wrong.witness = v.witness;
  const auto bad = run("verify", wrong);
  EXPECT_EQ(bad.exit_code, kCheckFailed);
  EXPECT_FALSE(bad.result["verify"]["ok"].get<bool>());

  auto garbage = with_expr("t1");
  garbage.witness = write_temp("garbage.json", "{not json");
  EXPECT_EQ(run("verify", garbage).exit_code, kModuleError);
}

TEST(Run, RankBoundsRefute) {
  auto o = with_expr("t1^2");
  o.box = "0..3";
  const auto r = run("rank", o);
  EXPECT_EQ(r.text, "rank 3");

  auto b = with_expr("t1^2 + t2^2");
  b.n = 3;
  const auto bounds = run("bounds", b);
  ASSERT_EQ(bounds.exit_code, kOk) << bounds.error;
  EXPECT_EQ(bounds.result["bounds"]["lower"], 3);
  EXPECT_EQ(bounds.result["bounds"]["upper"], 3);
  EXPECT_EQ(bounds.flags, std::vector<std::string>{"EXACT"});

  auto rf = with_expr("t1");
  rf.n = 3;
  const auto ref = run("refute2", rf);
  EXPECT_FALSE(ref.result["refutation"]["refuted"].get<bool>());

  b.kmax = 7;
  EXPECT_EQ(run("bounds", b).exit_code, kModuleError);
}

TEST(Run, Reconstruct) {
  RunOptions o;
  o.csv = write_temp("grid.csv", to_csv(sample(parse_expr("t1*exp(2) + 1"), GridBox::cube(1, 0, 11))));
  const auto r = run("reconstruct", o);
  ASSERT_EQ(r.exit_code, kOk) << r.error;
  EXPECT_EQ(parse_expr(r.result["expr"].get<std::string>()), parse_expr("t1*exp(2) + 1"));
  EXPECT_EQ(r.result["order"], 3);

  RunOptions small;
  small.csv = write_temp("small.csv", to_csv(sample(parse_expr("t1^3"), GridBox::cube(1, 0, 3))));
  const auto e = run("reconstruct", small);
  EXPECT_EQ(e.exit_code, kModuleError);
  EXPECT_NE(e.error.find("window too small"), std::string::npos);
}

TEST(Run, ErrorsAndExitCodes) {
  EXPECT_EQ(run("frobnicate", {}).exit_code, kUsage);
  EXPECT_EQ(run("degree", {}).exit_code, kUsage);
  EXPECT_EQ(run("degree", with_expr("t1 +")).exit_code, kUsage);
  const auto z = run("degree", with_expr("exp(0)"));
  EXPECT_EQ(z.exit_code, kModuleError);
  EXPECT_TRUE(z.flags.empty());
  EXPECT_TRUE(z.to_json().contains("error"));
  EXPECT_FALSE(z.to_json().contains("result"));
  auto missing_n = with_expr("t1");
  EXPECT_EQ(run("decompose", missing_n).exit_code, kUsage);
  RunOptions no_file;
  no_file.csv = "/nonexistent/grid.csv";
  EXPECT_NE(run("reconstruct", no_file).exit_code, kOk);
}

TEST(Run, ReportIsDeterministic) {
  auto o = with_expr("t1^2 + exp(1/2)");
  o.n = 3;
  const auto a = run("bounds", o, {"bounds", "--n", "3"});
  const auto b = run("bounds", o, {"bounds", "--n", "3"});
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_FALSE(a.to_json().contains("seconds"));

  // same function written differently has the same digest
  auto o2 = with_expr("exp(1/2) + t1*t1");
  o2.n = 3;
  EXPECT_EQ(run("bounds", o2).input_digest, a.input_digest);
  o2.n = 4;
  EXPECT_NE(run("bounds", o2).input_digest, a.input_digest);
}
