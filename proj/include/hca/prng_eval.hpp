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

/// \file prng_eval.hpp
/// Spectral and statistical evaluation of boolean functions and bit streams.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hca/bits.hpp"
#include "hca/ca.hpp"

namespace hca {

inline constexpr unsigned kMaxWalshArity = 20;

/// Truth table of a k-variable function; entry x is f(x) with variable j
/// read from bit j of x.
class BooleanFunction {
 public:
  BooleanFunction(unsigned arity, BitSequence table) : arity_(arity), table_(std::move(table)) {
    if (arity_ >= 63 || table_.size() != (std::size_t{1} << arity_)) {
      throw std::invalid_argument("truth table length must be 2^arity");
    }
  }

  /// The local function of an elementary rule: variable 2 is the left
  /// neighbor, 1 the cell itself, 0 the right neighbor.
  static BooleanFunction of_rule(Rule r) {
    BitSequence t(8);
    for (unsigned k = 0; k < 8; ++k) t[k] = r.output(k);
    return BooleanFunction(3, std::move(t));
  }

  unsigned arity() const { return arity_; }
  const BitSequence& table() const { return table_; }
  std::uint8_t operator()(std::size_t x) const { return table_[x]; }

 private:
  unsigned arity_;
  BitSequence table_;
};

/// W(w) = sum_x (-1)^(f(x) xor w.x), indexed by mask w.
using WalshSpectrum = std::vector<std::int64_t>;

/// In-place butterfly.
inline WalshSpectrum walsh_spectrum(const BooleanFunction& f) {
  if (f.arity() > kMaxWalshArity) {
    throw std::invalid_argument("walsh_spectrum: arity " + std::to_string(f.arity()) + " exceeds " +
                                std::to_string(kMaxWalshArity));
  }
  WalshSpectrum w(f.table().size());
  for (std::size_t x = 0; x < w.size(); ++x) w[x] = f(x) ? -1 : 1;
  for (std::size_t h = 1; h < w.size(); h <<= 1) {
    for (std::size_t i = 0; i < w.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = w[j];
        const std::int64_t b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  return w;
}

/// Xiao-Massey: CI of order m iff W vanishes on every mask of weight 1..m.
inline bool is_correlation_immune(const BooleanFunction& f, unsigned order) {
  if (order < 1 || order > f.arity()) throw std::invalid_argument("correlation immunity order must be in 1..arity");
  const WalshSpectrum w = walsh_spectrum(f);
  for (std::size_t mask = 1; mask < w.size(); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) <= order && w[mask] != 0) return false;
  }
  return true;
}

/// Largest m with CI of order m, 0 if not CI(1).
inline unsigned correlation_immunity_order(const BooleanFunction& f) {
  const WalshSpectrum w = walsh_spectrum(f);
  unsigned best = f.arity();
  for (std::size_t mask = 1; mask < w.size(); ++mask) {
    if (w[mask] != 0) best = std::min(best, static_cast<unsigned>(std::popcount(mask)) - 1);
  }
  return best;
}

/// Affine test: |W| = 2^k at exactly one mask.
inline bool is_linear(const BooleanFunction& f) {
  const WalshSpectrum w = walsh_spectrum(f);
  const std::int64_t full = std::int64_t{1} << f.arity();
  return std::count_if(w.begin(), w.end(), [&](std::int64_t v) { return v == full || v == -full; }) == 1;
}

struct RuleScanRow {
  int rule = 0;
  bool linear = false;
  bool ci1 = false;
  unsigned ci_order = 0;
  bool balanced = false;
  /// Balanced and CI(1).
  bool resilient1 = false;
};

struct RuleScan {
  std::vector<RuleScanRow> rows;

  std::size_t linear_count() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.linear; }));
  }

  /// Rules that are nonlinear yet CI(1).
  std::vector<int> nonlinear_ci1() const {
    std::vector<int> out;
    for (const auto& r : rows) {
      if (!r.linear && r.ci1) out.push_back(r.rule);
    }
    return out;
  }

  std::vector<int> nonlinear_resilient1() const {
    std::vector<int> out;
    for (const auto& r : rows) {
      if (!r.linear && r.resilient1) out.push_back(r.rule);
    }
    return out;
  }
};

/// Linearity and first-order correlation immunity of every elementary rule.
inline RuleScan scan_elementary_rules() {
  RuleScan scan;
  scan.rows.reserve(256);
  for (int n = 0; n < 256; ++n) {
    const BooleanFunction f = BooleanFunction::of_rule(Rule::from_number(n));
    RuleScanRow row;
    row.rule = n;
    row.linear = is_linear(f);
    row.ci_order = correlation_immunity_order(f);
    row.ci1 = row.ci_order >= 1;
    row.balanced = walsh_spectrum(f)[0] == 0;
    row.resilient1 = row.balanced && row.ci1;
    scan.rows.push_back(row);
  }
  return scan;
}

/// Empirical Shannon entropy, in bits, of the overlapping length-h windows
/// of a binary sequence (no wraparound).
inline double koza_entropy(const BitSequence& s, unsigned h, unsigned alphabet = 2) {
  if (alphabet != 2) throw std::invalid_argument("koza_entropy: only binary sequences (k = 2) are supported");
  if (h < 1 || h > 30) throw std::invalid_argument("koza_entropy: window length must be in 1..30");
  if (s.size() < h) throw std::invalid_argument("koza_entropy: sequence shorter than the window");
  const std::size_t windows = s.size() - h + 1;
  std::map<std::uint32_t, std::size_t> counts;
  const std::uint32_t mask = (std::uint32_t{1} << h) - 1;
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    w = ((w << 1) | s[i]) & mask;
    if (i + 1 >= h) ++counts[w];
  }
  double e = 0.0;
  for (auto [key, c] : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(windows);
    e -= p * std::log2(p);
  }
  return std::max(0.0, e);
}

// ---------------------------------------------------------------------------
// Test battery

/// Acceptance bands. FIPS 140-2 values apply to a 20000-bit sample.
struct BatteryThresholds {
  std::size_t fips_bits = 20000;
  std::size_t monobit_low = 9725;  // exclusive bounds
  std::size_t monobit_high = 10275;
  double poker_low = 2.16;
  double poker_high = 46.17;
  /// Inclusive bands for run lengths 1..5 and 6+, same for runs of 0s and 1s.
  std::array<std::pair<std::size_t, std::size_t>, 6> runs_bands{
      {{2315, 2685}, {1114, 1386}, {527, 723}, {240, 384}, {103, 209}, {103, 209}}};
  std::size_t long_run = 26;
  /// 1% and 99% quantiles of chi-square with 255 degrees of freedom.
  double chi2_low = 205.42;
  double chi2_high = 310.46;
  std::size_t chi2_min_bytes = 2560;
  /// |scc| must stay below this many standard errors, 1/sqrt(n).
  double serial_sigmas = 4.0;
  std::size_t serial_min_bits = 1000;
  unsigned entropy_window = 4;
  double entropy_min = 3.9;
  std::size_t montecarlo_points = 100000;
  double montecarlo_tolerance = 0.05;
};

struct TestReport {
  std::string test;
  std::map<std::string, double> params;
  std::map<std::string, double> statistics;
  bool pass = false;
  std::size_t length = 0;
  /// Set when the test could not run, e.g. on insufficient length.
  std::optional<std::string> error;
};

namespace detail {

inline TestReport length_error(std::string name, std::size_t have, std::size_t need) {
  TestReport r;
  r.test = std::move(name);
  r.length = have;
  r.params["required_bits"] = static_cast<double>(need);
  r.error = "insufficient length: " + std::to_string(have) + " bits, need " + std::to_string(need);
  return r;
}

/// Run counts by (bit value, min(length, 6) - 1) and longest run.
struct RunCounts {
  std::array<std::array<std::size_t, 6>, 2> counts{};
  std::size_t longest = 0;
};

inline RunCounts count_runs(const BitSequence& s, std::size_t n) {
  RunCounts rc;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && s[j] == s[i]) ++j;
    const std::size_t len = j - i;
    rc.longest = std::max(rc.longest, len);
    ++rc.counts[s[i]][std::min<std::size_t>(len, 6) - 1];
    i = j;
  }
  return rc;
}

}  // namespace detail

inline TestReport monobit_test(const BitSequence& s, const BatteryThresholds& t = {}) {
  if (s.size() < t.fips_bits) return detail::length_error("monobit", s.size(), t.fips_bits);
  TestReport r{"monobit", {{"bits", double(t.fips_bits)}}, {}, false, s.size(), std::nullopt};
  const std::size_t ones = static_cast<std::size_t>(std::count(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(t.fips_bits), 1));
  r.statistics["ones"] = static_cast<double>(ones);
  r.pass = ones > t.monobit_low && ones < t.monobit_high;
  return r;
}

inline TestReport poker_test(const BitSequence& s, const BatteryThresholds& t = {}) {
  if (s.size() < t.fips_bits) return detail::length_error("poker", s.size(), t.fips_bits);
  TestReport r{"poker", {{"bits", double(t.fips_bits)}, {"block", 4}}, {}, false, s.size(), std::nullopt};
  std::array<std::size_t, 16> f{};
  const std::size_t blocks = t.fips_bits / 4;
  for (std::size_t b = 0; b < blocks; ++b) {
    unsigned v = 0;
    for (std::size_t k = 0; k < 4; ++k) v = (v << 1) | s[4 * b + k];
    ++f[v];
  }
  double sum_sq = 0;
  for (auto c : f) sum_sq += static_cast<double>(c) * static_cast<double>(c);
  const double x = 16.0 / static_cast<double>(blocks) * sum_sq - static_cast<double>(blocks);
  r.statistics["x"] = x;
  r.pass = x > t.poker_low && x < t.poker_high;
  return r;
}

inline TestReport runs_test(const BitSequence& s, const BatteryThresholds& t = {}) {
  if (s.size() < t.fips_bits) return detail::length_error("runs", s.size(), t.fips_bits);
  TestReport r{"runs", {{"bits", double(t.fips_bits)}}, {}, true, s.size(), std::nullopt};
  const auto rc = detail::count_runs(s, t.fips_bits);
  for (int bit = 0; bit < 2; ++bit) {
    for (std::size_t len = 0; len < 6; ++len) {
      const std::size_t c = rc.counts[static_cast<std::size_t>(bit)][len];
      r.statistics["runs" + std::to_string(bit) + "_" + (len == 5 ? std::string("6+") : std::to_string(len + 1))] =
          static_cast<double>(c);
      if (c < t.runs_bands[len].first || c > t.runs_bands[len].second) r.pass = false;
    }
  }
  return r;
}

inline TestReport long_run_test(const BitSequence& s, const BatteryThresholds& t = {}) {
  if (s.size() < t.fips_bits) return detail::length_error("long-run", s.size(), t.fips_bits);
  TestReport r{"long-run", {{"bits", double(t.fips_bits)}, {"limit", double(t.long_run)}}, {}, false, s.size(),
               std::nullopt};
  const auto rc = detail::count_runs(s, t.fips_bits);
  r.statistics["longest"] = static_cast<double>(rc.longest);
  r.pass = rc.longest < t.long_run;
  return r;
}

/// Chi-square of byte frequencies, bytes packed most significant bit first.
inline TestReport chi2_test(const BitSequence& s, const BatteryThresholds& t = {}) {
  const std::size_t need = 8 * t.chi2_min_bytes;
  if (s.size() < need) return detail::length_error("chi2", s.size(), need);
  const auto bytes = pack_bytes_msb_first(s);
  std::array<std::size_t, 256> f{};
  for (auto b : bytes) ++f[b];
  const double expected = static_cast<double>(bytes.size()) / 256.0;
  double chi2 = 0;
  for (auto c : f) chi2 += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  TestReport r{"chi2", {{"bytes", double(bytes.size())}, {"dof", 255}}, {{"chi2", chi2}}, false, s.size(),
               std::nullopt};
  r.pass = chi2 > t.chi2_low && chi2 < t.chi2_high;
  return r;
}

/// Lag-1 serial correlation coefficient over bits, computed cyclically.
inline TestReport serial_test(const BitSequence& s, const BatteryThresholds& t = {}) {
  if (s.size() < t.serial_min_bits) return detail::length_error("serial", s.size(), t.serial_min_bits);
  const double n = static_cast<double>(s.size());
  double sum = 0, sum_sq = 0, cross = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double v = s[i];
    sum += v;
    sum_sq += v * v;
    cross += v * s[(i + 1) % s.size()];
  }
  const double denom = n * sum_sq - sum * sum;
  TestReport r{"serial", {{"sigmas", t.serial_sigmas}}, {}, false, s.size(), std::nullopt};
  if (denom == 0) {
    r.statistics["scc"] = 1.0;  // constant sequence
    r.pass = false;
    return r;
  }
  const double scc = (n * cross - sum * sum) / denom;
  const double bound = t.serial_sigmas / std::sqrt(n);
  r.statistics["scc"] = scc;
  r.statistics["bound"] = bound;
  r.pass = std::abs(scc) < bound;
  return r;
}

inline TestReport entropy_test(const BitSequence& s, const BatteryThresholds& t = {}) {
  if (s.size() < t.entropy_window) return detail::length_error("entropy", s.size(), t.entropy_window);
  const double e = koza_entropy(s, t.entropy_window);
  TestReport r{"entropy", {{"h", double(t.entropy_window)}, {"min", t.entropy_min}}, {{"entropy", e}}, false,
               s.size(), std::nullopt};
  r.pass = e >= t.entropy_min;
  return r;
}

/// Each point takes 48 consecutive bits: 24 for x, 24 for y, most
/// significant bit first. Estimates pi from the quarter-circle hit rate.
inline TestReport montecarlo_test(const BitSequence& s, const BatteryThresholds& t = {}) {
  const std::size_t need = 48 * t.montecarlo_points;
  if (s.size() < need) return detail::length_error("montecarlo", s.size(), need);
  constexpr double kScale = 16777216.0;  // 2^24
  std::size_t inside = 0;
  for (std::size_t p = 0; p < t.montecarlo_points; ++p) {
    std::uint32_t x = 0, y = 0;
    for (std::size_t k = 0; k < 24; ++k) x = (x << 1) | s[48 * p + k];
    for (std::size_t k = 24; k < 48; ++k) y = (y << 1) | s[48 * p + k];
    const double fx = x / kScale, fy = y / kScale;
    if (fx * fx + fy * fy <= 1.0) ++inside;
  }
  const double estimate = 4.0 * static_cast<double>(inside) / static_cast<double>(t.montecarlo_points);
  TestReport r{"montecarlo",
               {{"points", double(t.montecarlo_points)}, {"tolerance", t.montecarlo_tolerance}},
               {{"pi_estimate", estimate}, {"error", std::abs(estimate - std::numbers::pi)}},
               false,
               s.size(),
               std::nullopt};
  r.pass = std::abs(estimate - std::numbers::pi) < t.montecarlo_tolerance;
  return r;
}

/// Test names accepted by battery(); "fips" expands to the four FIPS tests.
inline std::vector<std::string> expand_battery_selection(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "fips") {
      for (const char* f : {"monobit", "poker", "runs", "long-run"}) out.emplace_back(f);
    } else if (n == "monobit" || n == "poker" || n == "runs" || n == "long-run" || n == "chi2" || n == "serial" ||
               n == "entropy" || n == "montecarlo") {
      out.push_back(n);
    } else {
      throw std::invalid_argument("unknown test '" + n + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Runs the selected tests; reports are sorted by test name.
inline std::vector<TestReport> battery(const BitSequence& s, const std::vector<std::string>& tests,
                                       const BatteryThresholds& t = {}) {
  std::vector<TestReport> out;
  for (const auto& name : expand_battery_selection(tests)) {
    if (name == "monobit") out.push_back(monobit_test(s, t));
    else if (name == "poker") out.push_back(poker_test(s, t));
    else if (name == "runs") out.push_back(runs_test(s, t));
    else if (name == "long-run") out.push_back(long_run_test(s, t));
    else if (name == "chi2") out.push_back(chi2_test(s, t));
    else if (name == "serial") out.push_back(serial_test(s, t));
    else if (name == "entropy") out.push_back(entropy_test(s, t));
    else if (name == "montecarlo") out.push_back(montecarlo_test(s, t));
  }
  return out;
}

}  // namespace hca
