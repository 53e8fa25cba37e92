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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hca/bits.hpp"

namespace hca {

/// A GF(2)-linear map on at most 64 bits, stored column by column:
/// columns[j] is the image of the j-th unit vector.
struct LinearMap {
  std::vector<std::uint64_t> columns;

  std::size_t dimension() const { return columns.size(); }

  std::uint64_t apply(std::uint64_t state) const {
    std::uint64_t out = 0;
    while (state != 0) {
      out ^= columns[static_cast<std::size_t>(std::countr_zero(state))];
      state &= state - 1;
    }
    return out;
  }
};

inline std::uint64_t pack_state(const BitSequence& bits) {
  if (bits.size() > 64) throw std::length_error("state wider than 64 bits");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) s |= std::uint64_t{bits[i] & 1U} << i;
  return s;
}

inline BitSequence unpack_state(std::uint64_t s, std::size_t n) {
  BitSequence out(n, 0);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>((s >> i) & 1U);
  return out;
}

/// Builds the column representation of any linear step function on
/// n-bit states.
template <typename StepFn>
LinearMap linear_map_of(std::size_t n, StepFn&& step_fn) {
  if (n > 64) throw std::length_error("linear map wider than 64 bits");
  LinearMap m;
  m.columns.reserve(n);
  for (std::size_t j = 0; j < n; ++j) m.columns.push_back(pack_state(step_fn(unpack_state(std::uint64_t{1} << j, n))));
  return m;
}

inline constexpr std::size_t kMaxCycleStateBits = 20;

/// Decomposition of a finite functional graph. Only states lying on cycles
/// are counted in `cycles`; the rest are transient.
struct CycleStructure {
  /// cycle length -> number of cycles of that length
  std::map<std::uint64_t, std::uint64_t> cycles;
  std::uint64_t transient_states = 0;

  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

inline std::string to_string(const CycleStructure& cs) {
  std::string out = "{";
  bool first = true;
  for (auto [len, count] : cs.cycles) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(len) + "," + std::to_string(count) + ")";
  }
  return out + "}";
}

/// Exhaustive traversal of all 2^bits states under `next`.
template <typename NextFn>
CycleStructure enumerate_cycles(std::size_t bits, NextFn&& next, std::size_t max_bits = kMaxCycleStateBits) {
  if (bits > max_bits) {
    throw std::invalid_argument("state space of " + std::to_string(bits) + " bits exceeds the cycle enumeration bound of " +
                                std::to_string(max_bits) + " bits");
  }
  const std::uint64_t total = std::uint64_t{1} << bits;
  constexpr std::uint32_t kUnseen = 0xffffffffU;
  constexpr std::uint32_t kDone = 0xfffffffeU;
  // Position of the state on the current walk, or a marker.
  std::vector<std::uint32_t> mark(total, kUnseen);
  std::vector<std::uint64_t> path;
  CycleStructure out;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (mark[start] != kUnseen) continue;
    path.clear();
    std::uint64_t s = start;
    while (mark[s] == kUnseen) {
      mark[s] = static_cast<std::uint32_t>(path.size());
      path.push_back(s);
      s = next(s);
      if (s >= total) throw std::out_of_range("next-state function left the state space");
    }
    std::uint64_t cycle_start = path.size();
    if (mark[s] != kDone) {
      cycle_start = mark[s];
      ++out.cycles[path.size() - cycle_start];
    }
    out.transient_states += cycle_start;
    for (auto v : path) mark[v] = kDone;
  }
  return out;
}

}  // namespace hca
