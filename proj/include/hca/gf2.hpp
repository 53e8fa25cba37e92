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

/// \file gf2.hpp
/// Polynomials over GF(2) and arithmetic in the extension fields GF(2^n).
///
/// Coefficients are stored one bit each, bit i being the coefficient of x^i.
/// Every value is canonical: no zero words are kept above the leading term,
/// so two equal polynomials always compare equal word by word.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hca/bits.hpp"

namespace hca {

class Gf2Poly {
 public:
  /// Degree reported for the zero polynomial. Distinct from every real
  /// degree, including 0.
  static constexpr int kZeroDegree = -1;

  Gf2Poly() = default;

  static Gf2Poly one() { return from_mask(1); }
  static Gf2Poly x() { return from_mask(2); }

  static Gf2Poly monomial(std::size_t k) {
    Gf2Poly p;
    p.flip(k);
    return p;
  }

  static Gf2Poly from_mask(std::uint64_t mask) {
    Gf2Poly p;
    if (mask != 0) p.words_.push_back(mask);
    return p;
  }

  /// bits[i] is the coefficient of x^i.
  static Gf2Poly from_bits(const BitSequence& bits) {
    Gf2Poly p;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) p.flip(i);
    }
    return p;
  }

  static Gf2Poly from_words(std::vector<std::uint64_t> words) {
    Gf2Poly p;
    p.words_ = std::move(words);
    p.trim();
    return p;
  }

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  int degree() const {
    if (words_.empty()) return kZeroDegree;
    return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
  }

  bool coeff(std::size_t i) const {
    std::size_t w = i / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1U);
  }

  /// Toggles the coefficient of x^i.
  void flip(std::size_t i) {
    std::size_t w = i / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= std::uint64_t{1} << (i % 64);
    trim();
  }

  /// Coefficient mask; requires degree < 64.
  std::uint64_t to_mask() const {
    if (words_.size() > 1) throw std::out_of_range("polynomial degree exceeds 63");
    return words_.empty() ? 0 : words_[0];
  }

  /// Coefficients x^0..x^(length-1) as a bit sequence.
  BitSequence to_bits(std::size_t length) const {
    BitSequence out(length, 0);
    for (std::size_t i = 0; i < length; ++i) out[i] = coeff(i) ? 1 : 0;
    return out;
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// this += other * x^shift
  void add_shifted(const Gf2Poly& other, std::size_t shift) {
    if (other.is_zero()) return;
    std::size_t ws = shift / 64;
    unsigned bs = static_cast<unsigned>(shift % 64);
    std::size_t need = other.words_.size() + ws + 1;
    if (words_.size() < need) words_.resize(need, 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
      std::uint64_t w = other.words_[i];
      words_[i + ws] ^= w << bs;
      if (bs != 0) words_[i + ws + 1] ^= w >> (64 - bs);
    }
    trim();
  }

  Gf2Poly shifted(std::size_t shift) const {
    Gf2Poly p;
    p.add_shifted(*this, shift);
    return p;
  }

  Gf2Poly& operator+=(const Gf2Poly& other) {
    if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
  }

  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator-(Gf2Poly a, const Gf2Poly& b) { return a += b; }

  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    const Gf2Poly& small = a.term_count() <= b.term_count() ? a : b;
    const Gf2Poly& large = &small == &a ? b : a;
    for (std::size_t w = 0; w < small.words_.size(); ++w) {
      std::uint64_t bits = small.words_[w];
      while (bits != 0) {
        unsigned k = static_cast<unsigned>(std::countr_zero(bits));
        bits &= bits - 1;
        out.add_shifted(large, 64 * w + k);
      }
    }
    return out;
  }

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  /// Orders by degree, then by coefficients from the top down.
  friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) {
    if (auto c = a.words_.size() <=> b.words_.size(); c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

inline Gf2Poly poly_add(const Gf2Poly& p, const Gf2Poly& q) { return p + q; }
inline Gf2Poly poly_mul(const Gf2Poly& p, const Gf2Poly& q) { return p * q; }

struct DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

inline DivMod poly_divmod(const Gf2Poly& p, const Gf2Poly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  DivMod r{Gf2Poly{}, p};
  const int dq = q.degree();
  while (r.remainder.degree() >= dq) {
    auto shift = static_cast<std::size_t>(r.remainder.degree() - dq);
    r.quotient.flip(shift);
    r.remainder.add_shifted(q, shift);
  }
  return r;
}

inline Gf2Poly operator%(const Gf2Poly& p, const Gf2Poly& q) { return poly_divmod(p, q).remainder; }
inline Gf2Poly operator/(const Gf2Poly& p, const Gf2Poly& q) { return poly_divmod(p, q).quotient; }

inline Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) { return (a * b) % m; }

/// base^e mod m by square-and-multiply.
inline Gf2Poly powmod(Gf2Poly base, std::uint64_t e, const Gf2Poly& m) {
  Gf2Poly result = Gf2Poly::one() % m;
  base = base % m;
  while (e != 0) {
    if (e & 1U) result = mulmod(result, base, m);
    e >>= 1;
    if (e != 0) base = mulmod(base, base, m);
  }
  return result;
}

/// Formal derivative in characteristic 2: only odd-exponent terms survive,
/// each dropping one degree.
inline Gf2Poly formal_derivative(const Gf2Poly& p) {
  Gf2Poly out;
  for (int i = 1; i <= p.degree(); i += 2) {
    if (p.coeff(static_cast<std::size_t>(i))) out.flip(static_cast<std::size_t>(i - 1));
  }
  return out;
}

/// Reciprocal x^degree * p(1/x).
inline Gf2Poly reciprocal(const Gf2Poly& p) {
  Gf2Poly out;
  const int d = p.degree();
  for (int i = 0; i <= d; ++i) {
    if (p.coeff(static_cast<std::size_t>(i))) out.flip(static_cast<std::size_t>(d - i));
  }
  return out;
}

/// Quotient sequence of the Euclidean algorithm on (p, q).
struct EuclidChain {
  std::vector<Gf2Poly> quotients;
  /// Last nonzero remainder.
  Gf2Poly gcd;

  bool coprime() const { return gcd.is_one(); }

  bool all_degree_one() const {
    return std::all_of(quotients.begin(), quotients.end(),
                       [](const Gf2Poly& q) { return q.degree() == 1; });
  }
};

/// Divides repeatedly until the remainder vanishes. Requires
/// degree(q) == degree(p) - 1.
inline EuclidChain euclid_quotients(const Gf2Poly& p, const Gf2Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("euclid_quotients: divisor is zero");
  if (q.degree() + 1 != p.degree()) {
    throw std::invalid_argument("euclid_quotients: degree(q) must equal degree(p) - 1");
  }
  EuclidChain chain;
  Gf2Poly a = p;
  Gf2Poly b = q;
  while (!b.is_zero()) {
    auto [quot, rem] = poly_divmod(a, b);
    chain.quotients.push_back(std::move(quot));
    a = std::move(b);
    b = std::move(rem);
  }
  chain.gcd = std::move(a);
  return chain;
}

/// Ben-Or/Rabin test: p of degree n is irreducible iff
/// gcd(x^(2^k) - x mod p, p) = 1 for every k <= n/2.
inline bool is_irreducible(const Gf2Poly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("is_irreducible: degree must be at least 1");
  if (n == 1) return true;
  Gf2Poly h = Gf2Poly::x() % p;
  for (int k = 1; k <= n / 2; ++k) {
    h = mulmod(h, h, p);
    if (!poly_gcd(p, h + Gf2Poly::x()).is_one()) return false;
  }
  return true;
}

/// Largest degree accepted by is_primitive.
inline constexpr int kMaxPrimitiveDegree = 32;

namespace detail {

/// Distinct prime factors by trial division over a sieved prime list.
inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 1U << 16;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  std::vector<std::uint64_t> factors;
  for (std::uint32_t pr : primes) {
    if (std::uint64_t{pr} * pr > n) break;
    if (n % pr == 0) {
      factors.push_back(pr);
      while (n % pr == 0) n /= pr;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

}  // namespace detail

/// True iff x has multiplicative order 2^n - 1 modulo the irreducible p.
inline bool is_primitive(const Gf2Poly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("is_primitive: degree must be at least 1");
  if (n > kMaxPrimitiveDegree) {
    throw std::invalid_argument("is_primitive: unsupported degree " + std::to_string(n) +
                                " (limit " + std::to_string(kMaxPrimitiveDegree) + ")");
  }
  if (!is_irreducible(p)) throw std::invalid_argument("is_primitive: polynomial is reducible");
  if (!p.coeff(0)) return false;  // p = x
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  if (!powmod(Gf2Poly::x(), order, p).is_one()) return false;
  for (std::uint64_t q : detail::distinct_prime_factors(order)) {
    if (powmod(Gf2Poly::x(), order / q, p).is_one()) return false;
  }
  return true;
}

/// All irreducible polynomials of the given degree, ascending.
inline std::vector<Gf2Poly> irreducible_polynomials(int degree) {
  if (degree < 1 || degree > 30) throw std::invalid_argument("irreducible_polynomials: degree out of range");
  std::vector<Gf2Poly> out;
  const std::uint64_t lo = std::uint64_t{1} << degree;
  for (std::uint64_t m = lo; m < 2 * lo; ++m) {
    Gf2Poly p = Gf2Poly::from_mask(m);
    if (is_irreducible(p)) out.push_back(std::move(p));
  }
  return out;
}

/// Smallest primitive polynomial of the given degree, by coefficient mask.
inline Gf2Poly smallest_primitive(int degree) {
  if (degree < 1 || degree > kMaxPrimitiveDegree) {
    throw std::invalid_argument("smallest_primitive: degree out of range");
  }
  const std::uint64_t lo = std::uint64_t{1} << degree;
  for (std::uint64_t m = lo | 1U; m < 2 * lo; m += 2) {
    Gf2Poly p = Gf2Poly::from_mask(m);
    if (is_irreducible(p) && is_primitive(p)) return p;
  }
  throw InvariantViolation("no primitive polynomial found");
}

/// Characteristic polynomial of the shortest linear recurrence generating
/// `s`. For s_{t+L} = sum_{i<L} c_i s_{t+i} the result is
/// x^L + sum c_i x^i, so its degree equals the linear complexity.
inline Gf2Poly berlekamp_massey(const BitSequence& s) {
  // Connection-polynomial form C(x) = 1 + c_1 x + ... + c_L x^L.
  Gf2Poly c = Gf2Poly::one();
  Gf2Poly b = Gf2Poly::one();
  std::size_t length = 0;
  std::size_t gap = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    std::uint8_t d = s[n];
    for (std::size_t i = 1; i <= length; ++i) d ^= static_cast<std::uint8_t>(c.coeff(i) & s[n - i]);
    if (d == 0) {
      ++gap;
      continue;
    }
    Gf2Poly prev = c;
    c.add_shifted(b, gap);
    if (2 * length <= n) {
      length = n + 1 - length;
      b = std::move(prev);
      gap = 1;
    } else {
      ++gap;
    }
  }
  Gf2Poly out;
  for (std::size_t i = 0; i <= length; ++i) {
    if (c.coeff(i)) out.flip(length - i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text formats

/// Symbolic form, descending exponents: "x^6+x^5+x^4+x^3+1".
inline std::string to_string(const Gf2Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    if (!p.coeff(static_cast<std::size_t>(i))) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

/// Hexadecimal coefficient mask, LSB = constant term: "0x79".
inline std::string to_hex_string(const Gf2Poly& p) {
  return to_hex(p.to_bits(static_cast<std::size_t>(std::max(p.degree() + 1, 1))));
}

/// Accepts "x^6+x^5+x^4+x^3+1" (terms in any order, repeated terms cancel)
/// or a hex mask "0x79".
inline Gf2Poly parse_poly(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    BitSequence bits = parse_hex_bits(s, 4 * (s.size() - 2));
    return Gf2Poly::from_bits(bits);
  }
  Gf2Poly out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed polynomial '" + std::string(text) + "'");
    std::size_t exp = 0;
    if (term == "0") {
      pos = end + 1;
      continue;
    }
    if (term == "1") {
      exp = 0;
    } else if (term == "x" || term == "X") {
      exp = 1;
    } else if (term.size() > 2 && (term[0] == 'x' || term[0] == 'X') && term[1] == '^') {
      const std::string digits = term.substr(2);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw std::invalid_argument("malformed term '" + term + "'");
      }
      exp = std::stoul(digits);
      if (exp > 4096) throw std::invalid_argument("exponent too large in '" + term + "'");
    } else {
      throw std::invalid_argument("malformed term '" + term + "'");
    }
    out.flip(exp);
    pos = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extension field GF(2^n) = GF(2)[x] / (modulus)

class FieldElement;

/// GF(2)[x] modulo an irreducible polynomial.
class Gf2Field {
 public:
  explicit Gf2Field(Gf2Poly modulus) : modulus_(std::make_shared<const Gf2Poly>(std::move(modulus))) {
    if (modulus_->degree() < 1) throw std::invalid_argument("field modulus must have degree >= 1");
    if (!is_irreducible(*modulus_)) {
      throw std::invalid_argument("field modulus " + to_string(*modulus_) + " is reducible");
    }
  }

  int degree() const { return modulus_->degree(); }
  const Gf2Poly& modulus() const { return *modulus_; }

  /// Number of field elements, 2^n. Requires n < 64.
  std::uint64_t size() const {
    if (degree() >= 64) throw std::out_of_range("field too large to enumerate");
    return std::uint64_t{1} << degree();
  }

  FieldElement element(const Gf2Poly& value) const;
  /// Element whose polynomial-basis coordinates are the bits of `index`.
  FieldElement from_index(std::uint64_t index) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// The residue class of x.
  FieldElement generator() const;

  friend bool operator==(const Gf2Field& a, const Gf2Field& b) { return *a.modulus_ == *b.modulus_; }

 private:
  friend class FieldElement;
  explicit Gf2Field(std::shared_ptr<const Gf2Poly> modulus) : modulus_(std::move(modulus)) {}
  std::shared_ptr<const Gf2Poly> modulus_;
};

class FieldElement {
 public:
  const Gf2Poly& value() const { return value_; }
  const Gf2Poly& modulus() const { return *modulus_; }
  int degree() const { return modulus_->degree(); }
  Gf2Field field() const { return Gf2Field(modulus_); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_.is_one(); }

  /// Polynomial-basis coordinates as an integer; requires n <= 64.
  std::uint64_t index() const { return value_.to_mask(); }

  FieldElement& operator+=(const FieldElement& o) {
    check_same_field(o);
    value_ += o.value_;
    return *this;
  }
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same_field(b);
    return FieldElement(mulmod(a.value_, b.value_, *a.modulus_), a.modulus_);
  }

  FieldElement squared() const { return *this * *this; }

  FieldElement pow(std::uint64_t e) const { return FieldElement(powmod(value_, e, *modulus_), modulus_); }

  /// Multiplicative inverse by the extended Euclidean algorithm.
  FieldElement inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    Gf2Poly r0 = *modulus_, r1 = value_;
    Gf2Poly s0, s1 = Gf2Poly::one();
    while (!r1.is_zero()) {
      auto [q, r] = poly_divmod(r0, r1);
      Gf2Poly s = s0 + q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (!r0.is_one()) throw InvariantViolation("field modulus not coprime to element");
    return FieldElement(s0 % *modulus_, modulus_);
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && *a.modulus_ == *b.modulus_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.value_ <=> b.value_;
  }

 private:
  friend class Gf2Field;
  FieldElement(Gf2Poly value, std::shared_ptr<const Gf2Poly> modulus)
      : value_(std::move(value)), modulus_(std::move(modulus)) {
    value_ = value_ % *modulus_;
  }

  void check_same_field(const FieldElement& o) const {
    if (modulus_ != o.modulus_ && *modulus_ != *o.modulus_) {
      throw std::invalid_argument("field elements have different moduli");
    }
  }

  Gf2Poly value_;
  std::shared_ptr<const Gf2Poly> modulus_;
};

inline FieldElement Gf2Field::element(const Gf2Poly& value) const { return FieldElement(value, modulus_); }
inline FieldElement Gf2Field::from_index(std::uint64_t index) const {
  return FieldElement(Gf2Poly::from_mask(index), modulus_);
}
inline FieldElement Gf2Field::zero() const { return element(Gf2Poly{}); }
inline FieldElement Gf2Field::one() const { return element(Gf2Poly::one()); }
inline FieldElement Gf2Field::generator() const { return element(Gf2Poly::x()); }

inline FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement field_pow(const FieldElement& a, std::uint64_t e) { return a.pow(e); }

/// Absolute trace a + a^2 + a^4 + ... + a^(2^(n-1)).
inline std::uint8_t trace(const FieldElement& a) {
  FieldElement sum = a;
  FieldElement term = a;
  for (int i = 1; i < a.degree(); ++i) {
    term = term.squared();
    sum += term;
  }
  if (sum.value().degree() > 0) throw InvariantViolation("trace left the prime field");
  return sum.is_one() ? 1 : 0;
}

/// Evaluates p at a by Horner's rule.
inline FieldElement evaluate(const Gf2Poly& p, const FieldElement& a) {
  const Gf2Field field = a.field();
  FieldElement acc = field.zero();
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a;
    if (p.coeff(static_cast<std::size_t>(i))) acc += field.one();
  }
  return acc;
}

namespace detail {

/// Solves z^2 + z = c through the GF(2)-linear map z -> z^2 + z by
/// Gaussian elimination. Requires n <= 64.
inline std::optional<FieldElement> artin_schreier_linear(const FieldElement& c) {
  const int n = c.degree();
  if (n > 64) throw std::invalid_argument("linear Artin-Schreier solve limited to degree 64");
  const Gf2Field field = c.field();
  // Augmented rows: row r holds coefficient r of L(x^j) in bit j, rhs in bit n.
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> rhs(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    FieldElement basis = field.element(Gf2Poly::monomial(static_cast<std::size_t>(j)));
    FieldElement image = basis.squared() + basis;
    for (int r = 0; r < n; ++r) {
      if (image.value().coeff(static_cast<std::size_t>(r))) rows[static_cast<std::size_t>(r)] |= std::uint64_t{1} << j;
    }
  }
  for (int r = 0; r < n; ++r) rhs[static_cast<std::size_t>(r)] = c.value().coeff(static_cast<std::size_t>(r)) ? 1 : 0;

  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && ((rows[pivot] >> col) & 1U) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    std::swap(rhs[pivot], rhs[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> col) & 1U)) {
        rows[r] ^= rows[rank];
        rhs[r] ^= rhs[rank];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rhs[r]) return std::nullopt;
  }
  Gf2Poly z;
  for (std::size_t r = 0; r < rank; ++r) {
    if (rhs[r]) z.flip(static_cast<std::size_t>(pivot_col[r]));
  }
  return field.element(z);
}

}  // namespace detail

/// Even field degrees below this use exhaustive search.
inline constexpr int kArtinSchreierSearchLimit = 16;

/// All z with z^2 + z = c: empty when trace(c) = 1, else {z, z + 1}.
inline std::vector<FieldElement> solve_artin_schreier(const FieldElement& c) {
  const int n = c.degree();
  if (trace(c) == 1) return {};
  const Gf2Field field = c.field();
  std::optional<FieldElement> z;
  if (n % 2 == 1) {
    // Half-trace: sum of c^(4^i) for i = 0..(n-1)/2.
    FieldElement term = c;
    FieldElement sum = c;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
      term = term.squared().squared();
      sum += term;
    }
    z = sum;
  } else if (n < kArtinSchreierSearchLimit) {
    for (std::uint64_t i = 0; i < field.size(); ++i) {
      FieldElement cand = field.from_index(i);
      if (cand.squared() + cand == c) {
        z = cand;
        break;
      }
    }
  } else {
    z = detail::artin_schreier_linear(c);
  }
  if (!z || z->squared() + *z != c) throw InvariantViolation("Artin-Schreier solve failed for trace-zero input");
  std::vector<FieldElement> out{*z, *z + field.one()};
  std::sort(out.begin(), out.end());
  return out;
}

/// Product of (x - c) over the Frobenius conjugates c of a.
inline Gf2Poly minimal_polynomial(const FieldElement& a) {
  std::vector<FieldElement> conjugates{a};
  for (FieldElement c = a.squared(); c != a; c = c.squared()) conjugates.push_back(c);

  const Gf2Field field = a.field();
  // Coefficients in the field, index i = coefficient of x^i.
  std::vector<FieldElement> coeffs{field.one()};
  for (const auto& root : conjugates) {
    std::vector<FieldElement> next(coeffs.size() + 1, field.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] += coeffs[i] * root;
    }
    coeffs = std::move(next);
  }
  Gf2Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].value().degree() > 0) throw InvariantViolation("minimal polynomial coefficient outside GF(2)");
    if (coeffs[i].is_one()) out.flip(i);
  }
  return out;
}

}  // namespace hca
