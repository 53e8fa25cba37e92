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

/// \file boolfunc.hpp
/// Trace-monomial boolean functions f(x) = Tr(a x + b x^s) over GF(2^n) and
/// their realization as composed LHCA.
///
/// Index i of a truth table names the field element whose polynomial-basis
/// coordinates are the bits of i (bit j is the coefficient of x^j).

#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hca/bits.hpp"
#include "hca/gf2.hpp"
#include "hca/lhca.hpp"
#include "hca/prng_eval.hpp"

namespace hca {

enum class Family { gold, kasami, welch, niho };

inline Family parse_family(std::string_view name) {
  if (name == "gold") return Family::gold;
  if (name == "kasami") return Family::kasami;
  if (name == "welch") return Family::welch;
  if (name == "niho") return Family::niho;
  throw std::invalid_argument("unknown exponent family '" + std::string(name) + "'");
}

inline std::string to_string(Family f) {
  switch (f) {
    case Family::gold: return "gold";
    case Family::kasami: return "kasami";
    case Family::welch: return "welch";
    case Family::niho: return "niho";
  }
  return "?";
}

/// `parameter` is i for Gold and Kasami; Welch and Niho derive everything
/// from the field degree.
struct ExponentFamily {
  Family name = Family::gold;
  unsigned parameter = 1;
  unsigned field_degree = 3;
};

inline constexpr unsigned kMaxFieldDegree = 31;

/// Niho's r: t/2 for even t, (3t+1)/2 for odd t, where n = 2t + 1.
inline unsigned niho_r(unsigned n) {
  const unsigned t = (n - 1) / 2;
  return t % 2 == 0 ? t / 2 : (3 * t + 1) / 2;
}

/// The unreduced exponent s of the family's almost-bent power map.
inline std::uint64_t exponent(const ExponentFamily& fam) {
  const unsigned n = fam.field_degree;
  const unsigned i = fam.parameter;
  if (n < 1 || n > kMaxFieldDegree) throw std::invalid_argument("field degree must be in 1.." + std::to_string(kMaxFieldDegree));
  switch (fam.name) {
    case Family::gold:
    case Family::kasami: {
      if (i < 1 || 2 * i > n) {
        throw std::invalid_argument(to_string(fam.name) + ": condition 1 <= i <= n/2 violated (i=" + std::to_string(i) +
                                    ", n=" + std::to_string(n) + ")");
      }
      if (std::gcd(i, n) != 1) {
        throw std::invalid_argument(to_string(fam.name) + ": condition gcd(i, n) = 1 violated (i=" + std::to_string(i) +
                                    ", n=" + std::to_string(n) + ")");
      }
      const std::uint64_t pi = std::uint64_t{1} << i;
      return fam.name == Family::gold ? pi + 1 : pi * pi - pi + 1;
    }
    case Family::welch:
      if (n % 2 == 0 || n < 3) {
        throw std::invalid_argument("welch: condition n odd, n >= 3 violated (n=" + std::to_string(n) + ")");
      }
      return (std::uint64_t{1} << ((n - 1) / 2)) + 3;
    case Family::niho: {
      if (n % 2 == 0 || n < 3) {
        throw std::invalid_argument("niho: condition n = 2t+1 with t >= 1 violated (n=" + std::to_string(n) + ")");
      }
      const unsigned r = niho_r(n);
      if (r < 1 || r > n) {
        throw std::invalid_argument("niho: condition 1 <= r <= n violated (r=" + std::to_string(r) + ")");
      }
      return (std::uint64_t{1} << (2 * r)) + (std::uint64_t{1} << r) - 1;
    }
  }
  throw std::invalid_argument("unknown family");
}

/// f(x) = Tr(a x + b x^s).
struct TraceMonomial {
  FieldElement a;
  FieldElement b;
  std::uint64_t s;

  std::uint8_t operator()(const FieldElement& x) const { return trace(a * x + b * x.pow(s)); }
};

inline TraceMonomial make_trace_monomial(const Gf2Field& field, std::uint64_t a_index, std::uint64_t b_index,
                                         std::uint64_t s) {
  if (a_index >= field.size() || b_index >= field.size()) {
    throw std::invalid_argument("coefficient does not fit in GF(2^" + std::to_string(field.degree()) + ")");
  }
  return {field.from_index(a_index), field.from_index(b_index), s};
}

inline BooleanFunction truth_table(const TraceMonomial& f) {
  const Gf2Field field = f.a.field();
  if (field.degree() > static_cast<int>(kMaxWalshArity)) throw std::invalid_argument("truth table too large");
  BitSequence table(field.size());
  for (std::uint64_t i = 0; i < table.size(); ++i) table[i] = f(field.from_index(i));
  return BooleanFunction(static_cast<unsigned>(field.degree()), std::move(table));
}

/// u_t = Tr(a alpha^t + b alpha^(s t)) with alpha the class of x.
inline BitSequence power_sequence(const TraceMonomial& f, std::size_t len) {
  if (!is_primitive(f.a.modulus())) {
    throw std::invalid_argument("power_sequence: modulus " + to_string(f.a.modulus()) + " is not primitive");
  }
  const FieldElement alpha = f.a.field().generator();
  const FieldElement alpha_s = alpha.pow(f.s);
  FieldElement at = f.a;
  FieldElement bt = f.b;
  BitSequence out;
  out.reserve(len);
  for (std::size_t t = 0; t < len; ++t) {
    out.push_back(trace(at + bt));
    at = at * alpha;
    bt = bt * alpha_s;
  }
  return out;
}

/// {s 2^j mod (2^n - 1)}.
inline std::set<std::uint64_t> cyclotomic_coset(std::uint64_t s, unsigned n) {
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  std::set<std::uint64_t> coset;
  std::uint64_t e = s % order;
  while (coset.insert(e).second) e = (2 * e) % order;
  return coset;
}

/// m_alpha * m_{alpha^s} for alpha the class of x modulo a primitive modulus.
inline Gf2Poly parity_check_poly(std::uint64_t s, const Gf2Poly& modulus) {
  if (!is_primitive(modulus)) {
    throw std::invalid_argument("parity_check_poly: modulus " + to_string(modulus) + " is not primitive");
  }
  const auto n = static_cast<unsigned>(modulus.degree());
  if (cyclotomic_coset(s, n).count(1) != 0) {
    throw std::invalid_argument("parity_check_poly: conjugate collision, alpha^" + std::to_string(s) +
                                " is a conjugate of alpha");
  }
  const Gf2Field field(modulus);
  const FieldElement alpha = field.generator();
  return minimal_polynomial(alpha) * minimal_polynomial(alpha.pow(s));
}

/// Block composition of the canonical realizations of m_alpha and
/// m_{alpha^s}, all cells zero.
inline LhcaMachine realize_as_lhca(std::uint64_t s, const Gf2Poly& modulus) {
  const Gf2Poly product = parity_check_poly(s, modulus);
  const Gf2Field field(modulus);
  const FieldElement alpha = field.generator();
  const Gf2Poly m1 = minimal_polynomial(alpha);
  const Gf2Poly m2 = minimal_polynomial(alpha.pow(s));
  LhcaMachine machine = compose({LhcaMachine(synthesize(m1).canonical()), LhcaMachine(synthesize(m2).canonical())});
  if (char_poly(machine) != product) throw InvariantViolation("composed machine does not realize m_alpha m_alpha^s");
  return machine;
}

}  // namespace hca
