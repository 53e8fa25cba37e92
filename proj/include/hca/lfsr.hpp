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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "hca/bits.hpp"
#include "hca/cycles.hpp"
#include "hca/gf2.hpp"

namespace hca {

enum class LfsrForm { fibonacci, galois };

/// Shift register whose connection polynomial p = x^n + sum c_i x^i is the
/// characteristic polynomial of its transition matrix.
///
/// Fibonacci: state[i] holds s_{t+i}; the register shifts toward index 0
/// and feeds sum c_i state[i] into index n-1. Output is state[0].
/// Galois: state holds the coefficients of r(x), updated to x r(x) mod p.
/// Output is the top coefficient state[n-1].
class LfsrMachine {
 public:
  LfsrMachine(Gf2Poly connection, BitSequence state, LfsrForm form = LfsrForm::fibonacci)
      : connection_(std::move(connection)), state_(std::move(state)), form_(form) {
    if (connection_.degree() < 1) throw std::invalid_argument("LFSR connection polynomial must have degree >= 1");
    if (state_.size() != static_cast<std::size_t>(connection_.degree())) {
      throw std::invalid_argument("LFSR state length " + std::to_string(state_.size()) +
                                  " does not match connection degree " + std::to_string(connection_.degree()));
    }
  }

  const Gf2Poly& connection() const { return connection_; }
  const BitSequence& state() const { return state_; }
  LfsrForm form() const { return form_; }
  std::size_t size() const { return state_.size(); }

  std::uint8_t output() const { return form_ == LfsrForm::fibonacci ? state_.front() : state_.back(); }

  LfsrMachine with_state(BitSequence state) const { return LfsrMachine(connection_, std::move(state), form_); }

  friend bool operator==(const LfsrMachine&, const LfsrMachine&) = default;

 private:
  Gf2Poly connection_;
  BitSequence state_;
  LfsrForm form_;
};

inline BitSequence lfsr_step_state(const Gf2Poly& connection, LfsrForm form, const BitSequence& s) {
  const std::size_t n = s.size();
  BitSequence next(n, 0);
  if (form == LfsrForm::fibonacci) {
    std::uint8_t feedback = 0;
    for (std::size_t i = 0; i < n; ++i) feedback ^= static_cast<std::uint8_t>(connection.coeff(i) & s[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i] = s[i + 1];
    next[n - 1] = feedback;
  } else {
    const std::uint8_t top = s[n - 1];
    for (std::size_t i = 0; i < n; ++i) {
      std::uint8_t shifted_in = i > 0 ? s[i - 1] : 0;
      next[i] = static_cast<std::uint8_t>(shifted_in ^ (top & connection.coeff(i)));
    }
  }
  return next;
}

inline LfsrMachine lfsr_step(const LfsrMachine& m) {
  return m.with_state(lfsr_step_state(m.connection(), m.form(), m.state()));
}

/// `len` output bits starting from the current state.
inline BitSequence lfsr_sequence(const LfsrMachine& m, std::size_t len) {
  BitSequence out;
  out.reserve(len);
  LfsrMachine cur = m;
  for (std::size_t t = 0; t < len; ++t) {
    out.push_back(cur.output());
    cur = lfsr_step(cur);
  }
  return out;
}

inline LinearMap transition_map(const LfsrMachine& m) {
  return linear_map_of(m.size(), [&](const BitSequence& s) { return lfsr_step_state(m.connection(), m.form(), s); });
}

inline CycleStructure cycle_structure(const LfsrMachine& m, std::size_t max_bits = kMaxCycleStateBits) {
  if (m.size() > max_bits) {
    throw std::invalid_argument("state space of " + std::to_string(m.size()) +
                                " bits exceeds the cycle enumeration bound of " + std::to_string(max_bits) + " bits");
  }
  const LinearMap a = transition_map(m);
  return enumerate_cycles(m.size(), [&](std::uint64_t s) { return a.apply(s); }, max_bits);
}

/// Least period of the state orbit from the current state, by stepping.
/// Returns 0 if the orbit does not return to its start within `limit`.
template <typename Machine, typename StepFn>
std::size_t orbit_period(const Machine& m, StepFn&& step_fn, std::size_t limit) {
  Machine cur = step_fn(m);
  for (std::size_t t = 1; t <= limit; ++t) {
    if (cur.state() == m.state()) return t;
    cur = step_fn(cur);
  }
  return 0;
}

}  // namespace hca
