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

/// \file lhca.hpp
/// Null-boundary linear hybrid cellular automata built from rules 90 and 150.
///
/// Cell i evolves as x_i <- x_{i-1} + d_i x_i + x_{i+1} over GF(2), with
/// d_i = 0 selecting rule 90 and d_i = 1 selecting rule 150. The transition
/// matrix is tridiagonal with the rule vector on its diagonal.

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hca/bits.hpp"
#include "hca/cycles.hpp"
#include "hca/gf2.hpp"

namespace hca {

/// Per-cell selector: 0 for rule 90, 1 for rule 150.
class RuleVector {
 public:
  explicit RuleVector(BitSequence d) : d_(std::move(d)) {
    if (d_.empty()) throw std::invalid_argument("rule vector must have at least one cell");
    for (auto b : d_) {
      if (b > 1) throw std::invalid_argument("rule vector entries must be 0 or 1");
    }
  }

  static RuleVector parse(std::string_view text) { return RuleVector(parse_bits(text)); }

  std::size_t size() const { return d_.size(); }
  std::uint8_t operator[](std::size_t i) const { return d_[i]; }
  const BitSequence& bits() const { return d_; }

  /// Cells i..j inclusive.
  RuleVector sub(std::size_t i, std::size_t j) const {
    if (i > j || j >= d_.size()) throw std::out_of_range("rule subvector bounds");
    return RuleVector(BitSequence(d_.begin() + static_cast<std::ptrdiff_t>(i),
                                  d_.begin() + static_cast<std::ptrdiff_t>(j) + 1));
  }

  friend bool operator==(const RuleVector&, const RuleVector&) = default;
  friend auto operator<=>(const RuleVector& a, const RuleVector& b) { return a.d_ <=> b.d_; }

 private:
  BitSequence d_;
};

inline std::string to_string(const RuleVector& v) { return to_string(v.bits()); }

inline RuleVector reversal(const RuleVector& v) {
  BitSequence d = v.bits();
  std::reverse(d.begin(), d.end());
  return RuleVector(std::move(d));
}

/// Characteristic polynomial by the three-term recurrence
/// D_k = (x + d_k) D_{k-1} + D_{k-2}, with D_{-2} = 0 and D_{-1} = 1.
inline Gf2Poly char_poly(const RuleVector& v) {
  Gf2Poly prev2;                  // D_{k-2}
  Gf2Poly prev1 = Gf2Poly::one();  // D_{k-1}
  for (std::size_t k = 0; k < v.size(); ++k) {
    Gf2Poly next = prev1.shifted(1) + prev2;
    if (v[k]) next += prev1;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

struct Subpolynomials {
  /// Characteristic polynomial of cells 0..N-2.
  Gf2Poly leading;
  /// Characteristic polynomial of cells 1..N-1.
  Gf2Poly trailing;
};

inline Subpolynomials subpolynomials(const RuleVector& v) {
  if (v.size() < 2) throw std::invalid_argument("subpolynomials need at least two cells");
  return {char_poly(v.sub(0, v.size() - 2)), char_poly(v.sub(1, v.size() - 1))};
}

/// Left-hand side of y^2 + (x^2 + x) p' y + 1 mod p.
inline Gf2Poly hca_congruence_residue(const Gf2Poly& y, const Gf2Poly& p) {
  const Gf2Poly b = (Gf2Poly::from_mask(0b110) * formal_derivative(p)) % p;
  return (y * y + b * y + Gf2Poly::one()) % p;
}

/// Residues y with y^2 + (x^2 + x) p' y + 1 = 0 mod p, for irreducible p.
///
/// With b = (x^2 + x) p' mod p nonzero, substituting y = b z gives
/// z^2 + z = b^{-2}, an Artin-Schreier equation in GF(2)[x]/(p). When b
/// vanishes the congruence collapses to y^2 = 1, whose only root is 1.
inline std::vector<Gf2Poly> solve_hca_congruence(const Gf2Poly& p) {
  if (p.degree() < 1) throw std::invalid_argument("solve_hca_congruence: degree must be at least 1");
  if (!is_irreducible(p)) throw std::invalid_argument("solve_hca_congruence: " + to_string(p) + " is reducible");
  const Gf2Field field(p);
  const FieldElement b = field.element(Gf2Poly::from_mask(0b110) * formal_derivative(p));
  if (b.is_zero()) return {Gf2Poly::one() % p};

  const FieldElement c = b.inverse().squared();
  std::vector<Gf2Poly> out;
  for (const auto& z : solve_artin_schreier(c)) out.push_back((b * z).value());
  std::sort(out.begin(), out.end());
  for (const auto& y : out) {
    if (!hca_congruence_residue(y, p).is_zero()) throw InvariantViolation("congruence root check failed");
  }
  return out;
}

/// The LHCA realizations of an irreducible polynomial, sorted ascending.
/// The first entry is the canonical one.
struct Synthesis {
  std::vector<RuleVector> realizations;

  const RuleVector& canonical() const { return realizations.front(); }
};

/// Each congruence root q seeds the Euclidean
/// algorithm on (p, q); the n degree-one quotients are x + d_{N-1}, ...,
/// x + d_0, so the rule vector is their constant terms read backwards.
inline Synthesis synthesize(const Gf2Poly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("synthesize: degree must be at least 1");
  if (!is_irreducible(p)) throw std::invalid_argument("synthesize: " + to_string(p) + " is reducible");
  Synthesis out;
  if (n == 1) {
    out.realizations.emplace_back(BitSequence{static_cast<std::uint8_t>(p.coeff(0))});
    return out;
  }
  for (const auto& q : solve_hca_congruence(p)) {
    if (q.degree() != n - 1) {
      throw InvariantViolation("congruence root " + to_string(q) + " is not of degree n-1 for " + to_string(p));
    }
    const EuclidChain chain = euclid_quotients(p, q);
    if (chain.quotients.size() != static_cast<std::size_t>(n) || !chain.all_degree_one()) {
      throw InvariantViolation("Euclidean chain of " + to_string(p) + " does not have n degree-one quotients");
    }
    BitSequence d(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < d.size(); ++j) d[d.size() - 1 - j] = chain.quotients[j].coeff(0) ? 1 : 0;
    RuleVector v(std::move(d));
    if (char_poly(v) != p) throw InvariantViolation("synthesized rule vector does not reproduce " + to_string(p));
    out.realizations.push_back(std::move(v));
  }
  std::sort(out.realizations.begin(), out.realizations.end());
  out.realizations.erase(std::unique(out.realizations.begin(), out.realizations.end()), out.realizations.end());
  if (out.realizations.size() != 2 || reversal(out.realizations[0]) != out.realizations[1]) {
    throw InvariantViolation("synthesis of " + to_string(p) + " did not yield a reversal pair");
  }
  return out;
}

/// Block-diagonal composition of independent null-boundary LHCA blocks.
class LhcaMachine {
 public:
  /// Single block with the all-zero state.
  explicit LhcaMachine(RuleVector rules) : LhcaMachine(std::vector<RuleVector>{std::move(rules)}) {}

  explicit LhcaMachine(std::vector<RuleVector> blocks) : blocks_(std::move(blocks)) {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    state_.assign(n, 0);
  }

  LhcaMachine(std::vector<RuleVector> blocks, BitSequence state) : LhcaMachine(std::move(blocks)) {
    set_state(std::move(state));
  }

  LhcaMachine(RuleVector rules, BitSequence state)
      : LhcaMachine(std::vector<RuleVector>{std::move(rules)}, std::move(state)) {}

  const std::vector<RuleVector>& blocks() const { return blocks_; }
  const BitSequence& state() const { return state_; }
  std::size_t size() const { return state_.size(); }

  void set_state(BitSequence state) {
    if (state.size() != state_.size()) {
      throw std::invalid_argument("state length " + std::to_string(state.size()) + " does not match " +
                                  std::to_string(state_.size()) + " cells");
    }
    state_ = std::move(state);
  }

  LhcaMachine with_state(BitSequence state) const {
    LhcaMachine m = *this;
    m.set_state(std::move(state));
    return m;
  }

  friend bool operator==(const LhcaMachine&, const LhcaMachine&) = default;

 private:
  std::vector<RuleVector> blocks_;
  BitSequence state_;
};

/// One synchronous update; outer neighbors of every block read as 0.
inline BitSequence lhca_step_state(const std::vector<RuleVector>& blocks, const BitSequence& state) {
  BitSequence next(state.size(), 0);
  std::size_t offset = 0;
  for (const auto& block : blocks) {
    const std::size_t n = block.size();
    std::span<const std::uint8_t> x(state.data() + offset, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint8_t v = static_cast<std::uint8_t>(block[i] & x[i]);
      if (i > 0) v ^= x[i - 1];
      if (i + 1 < n) v ^= x[i + 1];
      next[offset + i] = v;
    }
    offset += n;
  }
  return next;
}

inline LhcaMachine lhca_step(const LhcaMachine& m) {
  return m.with_state(lhca_step_state(m.blocks(), m.state()));
}

inline Gf2Poly char_poly(const LhcaMachine& m) {
  Gf2Poly p = Gf2Poly::one();
  for (const auto& b : m.blocks()) p = p * char_poly(b);
  return p;
}

/// Concatenates the blocks and states of the given machines in order.
inline LhcaMachine compose(const std::vector<LhcaMachine>& machines) {
  std::vector<RuleVector> blocks;
  BitSequence state;
  for (const auto& m : machines) {
    blocks.insert(blocks.end(), m.blocks().begin(), m.blocks().end());
    state.insert(state.end(), m.state().begin(), m.state().end());
  }
  if (blocks.empty()) throw std::invalid_argument("compose needs at least one machine");
  return LhcaMachine(std::move(blocks), std::move(state));
}

inline LinearMap transition_map(const LhcaMachine& m) {
  return linear_map_of(m.size(), [&](const BitSequence& s) { return lhca_step_state(m.blocks(), s); });
}

/// Output stream of one cell, starting from the machine's current state.
inline BitSequence lhca_cell_sequence(const LhcaMachine& m, std::size_t cell, std::size_t len) {
  if (cell >= m.size()) throw std::out_of_range("cell index out of range");
  BitSequence out;
  out.reserve(len);
  BitSequence s = m.state();
  for (std::size_t t = 0; t < len; ++t) {
    out.push_back(s[cell]);
    s = lhca_step_state(m.blocks(), s);
  }
  return out;
}

inline CycleStructure cycle_structure(const LhcaMachine& m, std::size_t max_bits = kMaxCycleStateBits) {
  if (m.size() > max_bits) {
    throw std::invalid_argument("state space of " + std::to_string(m.size()) +
                                " bits exceeds the cycle enumeration bound of " + std::to_string(max_bits) + " bits");
  }
  const LinearMap a = transition_map(m);
  return enumerate_cycles(m.size(), [&](std::uint64_t s) { return a.apply(s); }, max_bits);
}

}  // namespace hca
