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

/// \file ca.hpp
/// Elementary (radius-1, binary) cellular automata.
///
/// A rule number's bit k is the new cell value for the neighborhood whose
/// 3-bit value x_{i-1} x_i x_{i+1} equals k. Rule 30 is 00011110 read from
/// neighborhood 111 down to 000.

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hca/bits.hpp"

namespace hca {

class Rule {
 public:
  constexpr Rule() = default;

  static Rule from_number(int n) {
    if (n < 0 || n > 255) throw std::out_of_range("rule number must be in 0..255, got " + std::to_string(n));
    return Rule(static_cast<std::uint8_t>(n));
  }

  static constexpr Rule from_table(const std::array<std::uint8_t, 8>& table) {
    std::uint8_t n = 0;
    for (unsigned k = 0; k < 8; ++k) n = static_cast<std::uint8_t>(n | ((table[k] & 1U) << k));
    return Rule(n);
  }

  constexpr int number() const { return number_; }

  constexpr std::uint8_t apply(std::uint8_t left, std::uint8_t center, std::uint8_t right) const {
    return output(static_cast<unsigned>((left << 2) | (center << 1) | right));
  }

  /// Output for neighborhood value k in 0..7.
  constexpr std::uint8_t output(unsigned k) const { return static_cast<std::uint8_t>((number_ >> k) & 1U); }

  constexpr std::array<std::uint8_t, 8> table() const {
    std::array<std::uint8_t, 8> t{};
    for (unsigned k = 0; k < 8; ++k) t[k] = output(k);
    return t;
  }

  /// The 8-character word listing outputs for neighborhoods 111 down to 000.
  std::string word() const {
    std::string w;
    for (int k = 7; k >= 0; --k) w.push_back(output(static_cast<unsigned>(k)) ? '1' : '0');
    return w;
  }

  friend constexpr bool operator==(Rule, Rule) = default;

 private:
  constexpr explicit Rule(std::uint8_t n) : number_(n) {}
  std::uint8_t number_ = 0;
};

inline Rule rule_from_number(int n) { return Rule::from_number(n); }

namespace detail {
constexpr unsigned mirror3(unsigned k) { return ((k & 1U) << 2) | (k & 2U) | ((k >> 2) & 1U); }
}  // namespace detail

/// Swaps the roles of 0 and 1: f'(v) = not f(not v).
constexpr Rule conjugate(Rule r) {
  std::array<std::uint8_t, 8> t{};
  for (unsigned k = 0; k < 8; ++k) t[k] = static_cast<std::uint8_t>(1U - r.output(7U - k));
  return Rule::from_table(t);
}

/// Left-right mirror: f'(a, b, c) = f(c, b, a).
constexpr Rule reflect(Rule r) {
  std::array<std::uint8_t, 8> t{};
  for (unsigned k = 0; k < 8; ++k) t[k] = r.output(detail::mirror3(k));
  return Rule::from_table(t);
}

constexpr Rule conjugate_reflect(Rule r) { return conjugate(reflect(r)); }

enum class Boundary { cyclic, null };

struct Configuration {
  BitSequence cells;
  Boundary boundary = Boundary::cyclic;

  std::size_t size() const { return cells.size(); }
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

inline Configuration step(const Configuration& c, Rule r) {
  const std::size_t n = c.cells.size();
  Configuration next{BitSequence(n, 0), c.boundary};
  if (n == 0) return next;
  const bool ring = c.boundary == Boundary::cyclic;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t left = i > 0 ? c.cells[i - 1] : (ring ? c.cells[n - 1] : 0);
    std::uint8_t right = i + 1 < n ? c.cells[i + 1] : (ring ? c.cells[0] : 0);
    next.cells[i] = r.apply(left, c.cells[i], right);
  }
  return next;
}

/// Time-space diagram: row 0 is `c`, row t+1 is step(row t).
inline std::vector<Configuration> evolve(const Configuration& c, Rule r, std::size_t steps) {
  std::vector<Configuration> rows;
  rows.reserve(steps + 1);
  rows.push_back(c);
  for (std::size_t t = 0; t < steps; ++t) rows.push_back(step(rows.back(), r));
  return rows;
}

namespace detail {

/// Bit-parallel step for N <= 64, cell i in bit i.
inline std::uint64_t packed_step(std::uint64_t s, Rule r, unsigned n, bool ring) {
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::uint64_t left = s << 1;   // bit i <- cell i-1
  std::uint64_t right = s >> 1;  // bit i <- cell i+1
  if (ring) {
    left |= s >> (n - 1);
    right |= (s & 1U) << (n - 1);
  }
  left &= mask;
  right &= mask;
  std::uint64_t out = 0;
  for (unsigned k = 0; k < 8; ++k) {
    if (!r.output(k)) continue;
    std::uint64_t term = ((k & 4U) ? left : ~left) & ((k & 2U) ? s : ~s) & ((k & 1U) ? right : ~right);
    out |= term;
  }
  return out & mask;
}

}  // namespace detail

/// Values {x_cell^t} for t = 0..len-1.
inline BitSequence cell_sequence(const Configuration& c, Rule r, std::size_t cell, std::size_t len) {
  const std::size_t n = c.cells.size();
  if (cell >= n) {
    throw std::out_of_range("cell index " + std::to_string(cell) + " out of range for " + std::to_string(n) +
                            " cells");
  }
  BitSequence out;
  out.reserve(len);
  if (n <= 64) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s |= std::uint64_t{c.cells[i]} << i;
    const bool ring = c.boundary == Boundary::cyclic;
    for (std::size_t t = 0; t < len; ++t) {
      out.push_back(static_cast<std::uint8_t>((s >> cell) & 1U));
      s = detail::packed_step(s, r, static_cast<unsigned>(n), ring);
    }
    return out;
  }
  Configuration cur = c;
  for (std::size_t t = 0; t < len; ++t) {
    out.push_back(cur.cells[cell]);
    cur = step(cur, r);
  }
  return out;
}

/// Plain-text diagram, one row of '0'/'1' per time step.
inline std::string diagram_text(const std::vector<Configuration>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out += to_string(row.cells);
    out += '\n';
  }
  return out;
}

/// Plain PBM (P1); 1 paints black, 0 white.
inline std::string diagram_pbm(const std::vector<Configuration>& rows) {
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  std::string out = "P1\n" + std::to_string(width) + " " + std::to_string(rows.size()) + "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      if (i) out += ' ';
      out += row.cells[i] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace hca
