#include <algorithm>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "commands.hpp"
#include "omega_zeta/errors.hpp"

namespace omega_zeta::cli {
namespace {

using json = nlohmann::json;

GlobalOptions single_thread(const char* format = nullptr) {
  GlobalOptions g;
  g.threads = 1;
  if (format != nullptr) g.format = format;
  return g;
}

std::vector<json> parse_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

TEST(Cli, ParseComplex) {
  EXPECT_EQ(parse_complex("0.5,-2"), std::complex<double>(0.5, -2.0));
  EXPECT_EQ(parse_complex("3"), std::complex<double>(3.0, 0.0));
  EXPECT_EQ(parse_complex(" 1 , 2 "), std::complex<double>(1.0, 2.0));
  EXPECT_THROW(parse_complex("1,2,3"), DomainError);
  EXPECT_THROW(parse_complex("x"), DomainError);
  EXPECT_THROW(parse_complex(""), DomainError);
}

TEST(Cli, ZetaRecordSchema) {
  std::ostringstream out;
  ZetaOptions o;
  o.m = 3;
  ASSERT_EQ(cmd_zeta(single_thread(), o, out), kExitOk);
  const std::vector<json> lines = parse_lines(out.str());
  ASSERT_EQ(lines.size(), 1u);
  const json& r = lines[0];
  EXPECT_EQ(r["command"], "zeta");
  EXPECT_EQ(r["inputs"]["m"], 3);
  EXPECT_EQ(r["method"], "cvz");
  EXPECT_EQ(r["terms_used"], 64);
  EXPECT_NEAR(r["value_re"].get<double>(), 1.2020569031595942, 1e-9);
  EXPECT_EQ(r["value_im"], 0.0);
  EXPECT_TRUE(r.contains("abs_error_estimate"));
  EXPECT_TRUE(r["extras"].contains("oracle"));
  EXPECT_TRUE(r.contains("elapsed_ms"));
}

TEST(Cli, FieldOrder) {
  std::ostringstream out;
  ZetaOptions o;
  o.m = 2;
  cmd_zeta(single_thread(), o, out);
  const std::string line = out.str();
  std::size_t previous = 0;
  for (const char* key : {"\"command\"", "\"inputs\"", "\"value_re\"", "\"value_im\"",
                          "\"abs_error_estimate\"", "\"terms_used\"", "\"method\"", "\"extras\"",
                          "\"elapsed_ms\""}) {
    const std::size_t at = line.find(key, previous);
    ASSERT_NE(at, std::string::npos) << key;
    previous = at;
  }
}

std::string strip_elapsed(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const std::size_t at = line.find("\"elapsed_ms\"");
    out += (at == std::string::npos ? line : line.substr(0, at)) + '\n';
  }
  return out;
}

TEST(Cli, SingleThreadOutputIsDeterministic) {
  Zeta3Options o;
  o.variant = "beta";
  o.method = "cvz";
  std::ostringstream a;
  std::ostringstream b;
  cmd_zeta3(single_thread(), o, a);
  cmd_zeta3(single_thread(), o, b);
  EXPECT_EQ(strip_elapsed(a.str()), strip_elapsed(b.str()));
}

TEST(Cli, PhiAllReportsDisagreement) {
  std::ostringstream out;
  PhiOptions o;
  o.m = 4;
  o.z = "0.3,0.4";
  o.route = "all";
  ASSERT_EQ(cmd_phi(single_thread(), o, out), kExitOk);
  const std::vector<json> lines = parse_lines(out.str());
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[3]["method"], "all");
  EXPECT_LT(lines[3]["extras"]["max_relative_disagreement"].get<double>(), 1e-9);
}

TEST(Cli, PhiAllSkipsExpZetaOutsideItsDisk) {
  std::ostringstream out;
  PhiOptions o;
  o.m = 3;
  o.z = "1.5,0.5";
  o.route = "all";
  cmd_phi(single_thread(), o, out);
  const std::vector<json> lines = parse_lines(out.str());
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[2]["extras"]["skipped_routes"][0], "expzeta");
}

TEST(Cli, ConvergeCsv) {
  std::ostringstream out;
  ConvergeOptions o;
  o.m = 3;
  o.max_terms = 5;
  ASSERT_EQ(cmd_converge(single_thread(), o, out), kExitOk);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,term,partial_sum,accelerated,abs_error_vs_oracle");
  int rows = 0;
  for (std::string line; std::getline(in, line);) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
    EXPECT_EQ(line.substr(0, line.find(',')), std::to_string(rows));
  }
  EXPECT_EQ(rows, 5);
}

TEST(Cli, GammaPfdReportsRegime) {
  std::ostringstream out;
  GammaPfdOptions o;
  o.a = 2.0;
  o.z = "0.4";
  ASSERT_EQ(cmd_gamma_pfd(single_thread(), o, out), kExitOk);
  const json r = parse_lines(out.str())[0];
  EXPECT_EQ(r["extras"]["regime"], "regularized");
  EXPECT_EQ(r["method"], "euler");
  EXPECT_LT(r["extras"]["abs_deviation"].get<double>(), 1e-6);
}

TEST(Cli, ErrorsMapToExitCodes) {
  std::ostringstream out;
  std::ostringstream err;
  GammaPfdOptions divergent;
  divergent.a = 3.0;
  divergent.z = "0.4,0";
  divergent.method = "none";
  EXPECT_EQ(run_guarded([&] { return cmd_gamma_pfd(single_thread(), divergent, out); }, err),
            kExitDivergence);
  ZetaOptions low;
  low.m = 1;
  EXPECT_EQ(run_guarded([&] { return cmd_zeta(single_thread(), low, out); }, err), kExitDomain);
  PhiOptions pole;
  pole.m = 3;
  pole.z = "2,0";
  EXPECT_EQ(run_guarded([&] { return cmd_phi(single_thread(), pole, out); }, err), kExitDomain);
  EXPECT_EQ(run_guarded([]() -> int { throw SignPatternError("x"); }, err), kExitDomain);
  EXPECT_EQ(run_guarded([]() -> int { throw NumericalResidueError("x"); }, err), kExitResidue);
  EXPECT_EQ(run_guarded([]() -> int { throw OverflowError("x"); }, err), kExitResidue);
  EXPECT_EQ(out.str(), "");
  EXPECT_NE(err.str().find("divergence"), std::string::npos);
}

TEST(Cli, VerifyTextAndExitCode) {
  std::ostringstream out;
  VerifyOptions o;
  o.suite = "oracle";
  ASSERT_EQ(cmd_verify(single_thread("text"), o, out), kExitOk);
  EXPECT_NE(out.str().find("PASS oracle/"), std::string::npos);
  EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
}

TEST(Cli, CsvAndTextRecords) {
  ZetaOptions o;
  o.m = 4;
  std::ostringstream csv;
  cmd_zeta(single_thread("csv"), o, csv);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
            "command,inputs,value_re,value_im,abs_error_estimate,terms_used,method,extras,elapsed_ms");
  std::ostringstream text;
  cmd_zeta(single_thread("text"), o, text);
  EXPECT_NE(text.str().find("command: zeta"), std::string::npos);
  EXPECT_NE(text.str().find("method: cvz"), std::string::npos);
}

}  // namespace
}  // namespace omega_zeta::cli
