// Copyright 2026 The hcasynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace hca::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, {in, out, err});
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

TEST(CliTest, CharpolyCounterExample) {
  const auto r = run_cli({"charpoly", "--rules", "001000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^6+x^5+x^4+x^3+1\n");
  EXPECT_EQ(run_cli({"charpoly", "--rules", "-"}, "110111\n").out, "x^6+x^5+x^4+x^3+1\n");
}

TEST(CliTest, SynthExample) {
  const auto r = run_cli({"synth", "--poly", "x^2+x+1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"realization 01", "realization 10", "canonical 01"}));
  const auto j = Json::parse(run_cli({"synth", "--poly", "x^2+x+1", "--json"}).out);
  EXPECT_EQ(j["realizations"], Json::array({"01", "10"}));
}

TEST(CliTest, ScanRulesJson) {
  const auto r = run_cli({"scan-rules", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto rows = Json::parse(r.out);
  ASSERT_EQ(rows.size(), 256U);
  std::vector<int> nonlinear_ci1;
  for (const auto& row : rows) {
    ASSERT_EQ(row["nonlinear"].get<bool>(), !row["linear"].get<bool>());
    if (row["nonlinear"].get<bool>() && row["ci1"].get<bool>()) nonlinear_ci1.push_back(row["rule"].get<int>());
    if (row["nonlinear"].get<bool>()) {
      ASSERT_FALSE(row["resilient1"].get<bool>());
    }
  }
  EXPECT_EQ(nonlinear_ci1, (std::vector<int>{24, 36, 66, 126, 129, 189, 219, 231}));
  EXPECT_EQ(run_cli({"scan-rules", "--json"}).out, r.out);
}

TEST(CliTest, SynthCharpolyRoundTrip) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : irreducible_polynomials(n)) {
      const auto s = run_cli({"synth", "--poly", to_string(p)});
      ASSERT_EQ(s.code, 0) << s.err;
      for (const auto& line : lines(s.out)) {
        if (line.rfind("realization ", 0) != 0) continue;
        const auto c = run_cli({"charpoly", "--rules", "-"}, line.substr(12));
        ASSERT_EQ(c.out, to_string(p) + "\n");
      }
    }
  }
}

TEST(CliTest, HexPolynomials) {
  EXPECT_EQ(run_cli({"charpoly", "--rules", "001000", "--hex"}).out, "0x79\n");
  EXPECT_EQ(run_cli({"synth", "--poly", "0x7", "--verify"}).code, 0);
}

TEST(CliTest, CyclesJsonSchema) {
  const auto r = run_cli({"cycles", "--machine", "lfsr", "--poly", "x^4+x^3+x^2+x+1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["machine"], "lfsr");
  EXPECT_EQ(j["state_bits"], 4);
  EXPECT_EQ(j["cycles"], Json::parse(R"([{"length":1,"count":1},{"length":5,"count":3}])"));
  EXPECT_EQ(j["transient_states"], 0);
  const auto h = Json::parse(run_cli({"cycles", "--machine", "lhca", "--poly", "x^4+x+1"}).out);
  EXPECT_EQ(h["rules"], "0101");
  EXPECT_EQ(h["cycles"], Json::parse(R"([{"length":1,"count":1},{"length":15,"count":1}])"));
}

TEST(CliTest, EvolveDiagram) {
  const auto r = run_cli({"evolve", "--rule", "30", "--init", "00001000", "--steps", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"00001000", "00011100", "00110010", "01101111", "01001000",
                                                    "11111100", "10000011", "01000110"}));
  const auto pbm = run_cli({"evolve", "--rule", "90", "--init", "0100", "--steps", "1", "--format", "pbm"});
  EXPECT_EQ(pbm.out, "P1\n4 2\n0 1 0 0\n1 0 1 0\n");
}

TEST(CliTest, GenThenTestPipeline) {
  const auto g = run_cli({"gen", "--rule", "30", "--cells", "64", "--bits", "20000"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto t = run_cli({"test", "--in", "-", "--battery", "fips", "--json", "--strict"}, g.out);
  EXPECT_EQ(t.code, 0) << t.out;
  const auto reports = Json::parse(t.out);
  ASSERT_EQ(reports.size(), 4U);
  for (const auto& r : reports) {
    EXPECT_TRUE(r["pass"].get<bool>()) << r.dump();
    for (const char* key : {"test", "params", "statistics", "pass", "length"}) EXPECT_TRUE(r.contains(key));
  }
}

TEST(CliTest, StrictBatteryFailureExitCode) {
  const std::string zeros(20000, '0');
  EXPECT_EQ(run_cli({"test", "--in", "-", "--battery", "monobit", "--strict"}, zeros).code, 2);
  EXPECT_EQ(run_cli({"test", "--in", "-", "--battery", "monobit"}, zeros).code, 0);
}

TEST(CliTest, GenIsDeterministic) {
  const std::vector<std::string> args{"gen", "--lfsr", "x^4+x+1", "--bits", "30"};
  const auto a = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run_cli(args).out);
  EXPECT_EQ(run_cli({"gen", "--lfsr", "x^4+x+1", "--seed", "1", "--bits", "15"}).out.size(), 16U);
}

TEST(CliTest, Minpoly) {
  EXPECT_EQ(run_cli({"minpoly", "--modulus", "x^3+x+1", "--power", "3"}).out, "x^3+x^2+1\n");
}

TEST(CliTest, Boolfunc) {
  const auto r = run_cli({"boolfunc", "--family", "gold", "--n", "3", "--i", "1", "--a", "1", "--b", "1",
                          "--modulus", "x^3+x+1", "--parity", "--lhca", "--walsh"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.at(0), "exponent 3");
  EXPECT_EQ(ls.at(1), "modulus x^3+x+1");
  EXPECT_EQ(ls.at(2), "parity x^6+x^5+x^4+x^3+x^2+x+1");
  EXPECT_EQ(ls.at(4), "lhca-charpoly x^6+x^5+x^4+x^3+x^2+x+1");
}

TEST(CliTest, Errors) {
  const auto reducible = run_cli({"synth", "--poly", "x^6+x^5+x^4+x^3+1"});
  EXPECT_EQ(reducible.code, 1);
  EXPECT_NE(reducible.err.find("reducible"), std::string::npos);
  EXPECT_NE(run_cli({}).code, 0);
  EXPECT_NE(run_cli({"synth"}).code, 0);
  EXPECT_NE(run_cli({"frobnicate"}).code, 0);
  EXPECT_EQ(run_cli({"charpoly", "--rules", "012"}).code, 1);
  const auto gold = run_cli({"boolfunc", "--family", "gold", "--n", "4", "--i", "2"});
  EXPECT_EQ(gold.code, 1);
  EXPECT_NE(gold.err.find("gcd"), std::string::npos);
}

}  // namespace
}  // namespace hca::cli
