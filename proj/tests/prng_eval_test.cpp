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


#include "hca/prng_eval.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hca/ca.hpp"
#include "oracles.hpp"

namespace hca {
namespace {

BooleanFunction rule_fn(int n) { return BooleanFunction::of_rule(Rule::from_number(n)); }

// 64-cell ring, single 1 at cell 32, stream read at cell 32.
BitSequence rule30_stream(std::size_t len) {
  Configuration c{BitSequence(64, 0), Boundary::cyclic};
  c.cells[32] = 1;
  return cell_sequence(c, Rule::from_number(30), 32, len);
}

BitSequence alternating(std::size_t len) {
  BitSequence s(len);
  for (std::size_t i = 0; i < len; ++i) s[i] = static_cast<std::uint8_t>(i & 1U);
  return s;
}

const TestReport& find(const std::vector<TestReport>& rs, const std::string& name) {
  auto it = std::find_if(rs.begin(), rs.end(), [&](const TestReport& r) { return r.test == name; });
  if (it == rs.end()) throw std::runtime_error("missing report " + name);
  return *it;
}

TEST(BooleanFunctionTest, Validation) {
  EXPECT_THROW(BooleanFunction(3, BitSequence(7)), std::invalid_argument);
  EXPECT_EQ(rule_fn(30).table(), (BitSequence{0, 1, 1, 1, 1, 0, 0, 0}));
}

TEST(WalshTest, Examples) {
  const auto zero = walsh_spectrum(BooleanFunction(3, BitSequence(8, 0)));
  EXPECT_EQ(zero, (WalshSpectrum{8, 0, 0, 0, 0, 0, 0, 0}));
  const auto w90 = walsh_spectrum(rule_fn(90));
  for (std::size_t m = 0; m < 8; ++m) EXPECT_EQ(w90[m], m == 0b101 ? 8 : 0) << m;
  const auto w30 = walsh_spectrum(rule_fn(30));
  EXPECT_TRUE(w30[1] != 0 || w30[2] != 0 || w30[4] != 0);
  EXPECT_THROW(walsh_spectrum(BooleanFunction(21, BitSequence(std::size_t{1} << 21))), std::invalid_argument);
}

TEST(WalshTest, ParsevalAndWeight) {
  std::mt19937_64 rng(41);
  for (unsigned k = 1; k <= 12; ++k) {
    BitSequence t(std::size_t{1} << k);
    for (auto& b : t) b = rng() & 1U;
    const auto w = walsh_spectrum(BooleanFunction(k, t));
    std::int64_t sq = 0;
    for (auto v : w) sq += v * v;
    ASSERT_EQ(sq, std::int64_t{1} << (2 * k));
    ASSERT_EQ(w[0], static_cast<std::int64_t>(t.size()) - 2 * static_cast<std::int64_t>(weight(t)));
  }
}

TEST(WalshTest, FastMatchesNaive) {
  for (int n = 0; n < 256; ++n) {
    const auto f = rule_fn(n);
    const auto naive = oracle::walsh_naive(f.table());
    ASSERT_TRUE(std::equal(naive.begin(), naive.end(), walsh_spectrum(f).begin())) << n;
  }
  std::mt19937_64 rng(43);
  for (unsigned k = 1; k <= 10; ++k) {
    BitSequence t(std::size_t{1} << k);
    for (auto& b : t) b = rng() & 1U;
    const auto naive = oracle::walsh_naive(t);
    ASSERT_TRUE(std::equal(naive.begin(), naive.end(), walsh_spectrum(BooleanFunction(k, t)).begin())) << k;
  }
}

TEST(CorrelationImmunityTest, Examples) {
  BitSequence parity3(8);
  for (unsigned x = 0; x < 8; ++x) parity3[x] = static_cast<std::uint8_t>(std::popcount(x) & 1);
  const BooleanFunction xor3(3, parity3);
  EXPECT_TRUE(is_correlation_immune(xor3, 2));
  EXPECT_FALSE(is_correlation_immune(xor3, 3));
  EXPECT_EQ(correlation_immunity_order(xor3), 2U);
  EXPECT_FALSE(is_correlation_immune(rule_fn(30), 1));
  const BooleanFunction one(3, BitSequence(8, 1));
  for (unsigned m = 1; m <= 3; ++m) EXPECT_TRUE(is_correlation_immune(one, m));
  EXPECT_THROW(is_correlation_immune(one, 0), std::invalid_argument);
  EXPECT_THROW(is_correlation_immune(one, 4), std::invalid_argument);
}

TEST(LinearityTest, Examples) {
  for (int n : {90, 150, 105, 165}) EXPECT_TRUE(is_linear(rule_fn(n))) << n;
  EXPECT_FALSE(is_linear(rule_fn(30)));
}

TEST(LinearityTest, MatchesAffineEnumeration) {
  std::set<int> affine;
  for (unsigned a = 0; a < 8; ++a) {
    for (unsigned c = 0; c < 2; ++c) {
      int number = 0;
      for (unsigned x = 0; x < 8; ++x) number |= static_cast<int>(((std::popcount(a & x) & 1U) ^ c) << x);
      affine.insert(number);
    }
  }
  ASSERT_EQ(affine.size(), 16U);
  for (int n = 0; n < 256; ++n) EXPECT_EQ(is_linear(rule_fn(n)), affine.count(n) == 1) << n;
}

TEST(RuleScanTest, Facts) {
  const RuleScan scan = scan_elementary_rules();
  ASSERT_EQ(scan.rows.size(), 256U);
  EXPECT_EQ(scan.linear_count(), 16U);
  // CI(1) nonlinear rules exist, but none of them is balanced.
  EXPECT_EQ(scan.nonlinear_ci1(), (std::vector<int>{24, 36, 66, 126, 129, 189, 219, 231}));
  for (int n : scan.nonlinear_ci1()) {
    EXPECT_FALSE(scan.rows[static_cast<std::size_t>(n)].balanced);
    EXPECT_EQ(std::abs(walsh_spectrum(rule_fn(n))[0]), 4);
  }
  EXPECT_TRUE(scan.nonlinear_resilient1().empty());
  for (const auto& row : scan.rows) {
    const auto& mirror = scan.rows[static_cast<std::size_t>(reflect(Rule::from_number(row.rule)).number())];
    ASSERT_EQ(row.ci1, mirror.ci1) << row.rule;
    ASSERT_EQ(row.linear, mirror.linear) << row.rule;
  }
}

TEST(KozaEntropyTest, Examples) {
  EXPECT_DOUBLE_EQ(koza_entropy(BitSequence(100, 0), 3), 0.0);
  EXPECT_DOUBLE_EQ(koza_entropy(alternating(1000), 1), 1.0);
  // Cyclic de Bruijn word 0011 repeated: all four pairs equally often.
  BitSequence db;
  for (int i = 0; i < 250; ++i) db.insert(db.end(), {0, 0, 1, 1});
  db.push_back(0);
  EXPECT_DOUBLE_EQ(koza_entropy(db, 2), 2.0);
  EXPECT_THROW(koza_entropy(BitSequence(2), 3), std::invalid_argument);
  EXPECT_THROW(koza_entropy(BitSequence(8), 2, 3), std::invalid_argument);
  EXPECT_THROW(koza_entropy(BitSequence(8), 0), std::invalid_argument);
}

TEST(KozaEntropyTest, BoundsAndRelabelingInvariance) {
  std::mt19937_64 rng(47);
  for (unsigned h = 1; h <= 6; ++h) {
    BitSequence s(500);
    for (auto& b : s) b = (rng() % 3 == 0) ? 1 : 0;
    const double e = koza_entropy(s, h);
    ASSERT_GE(e, 0.0);
    ASSERT_LE(e, static_cast<double>(h) + 1e-12);
    // Complementing every bit relabels the window alphabet.
    BitSequence comp = s;
    for (auto& b : comp) b ^= 1U;
    ASSERT_NEAR(koza_entropy(comp, h), e, 1e-12);
  }
}

TEST(BatteryTest, AllZeroFailsMonobit) {
  const auto r = monobit_test(BitSequence(20000, 0));
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.statistics.at("ones"), 0.0);
}

TEST(BatteryTest, AlternatingPassesMonobitFailsRuns) {
  const auto s = alternating(20000);
  EXPECT_TRUE(monobit_test(s).pass);
  EXPECT_FALSE(runs_test(s).pass);
  EXPECT_TRUE(long_run_test(s).pass);
}

TEST(BatteryTest, Rule30PassesFips) {
  const auto reports = battery(rule30_stream(20000), {"fips"});
  ASSERT_EQ(reports.size(), 4U);
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.test;
}

TEST(BatteryTest, Rule30FullBattery) {
  const auto reports = battery(rule30_stream(100000), {"fips", "chi2", "serial", "entropy"});
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.test;
  EXPECT_GE(koza_entropy(rule30_stream(100000), 4), 3.9);
}

TEST(BatteryTest, InsufficientLengthIsPerTestError) {
  const auto reports = battery(BitSequence(100, 0), {"fips", "chi2", "montecarlo"});
  ASSERT_EQ(reports.size(), 6U);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.error.has_value()) << r.test;
    EXPECT_FALSE(r.pass);
  }
  EXPECT_FALSE(find(reports, "chi2").error->empty());
}

TEST(BatteryTest, SelectionIsSortedAndValidated) {
  EXPECT_EQ(expand_battery_selection({"serial", "fips"}),
            (std::vector<std::string>{"long-run", "monobit", "poker", "runs", "serial"}));
  EXPECT_THROW(expand_battery_selection({"nist"}), std::invalid_argument);
}

}  // namespace
}  // namespace hca
