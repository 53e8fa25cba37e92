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

// Brute-force reference computations on 64-bit coefficient masks. Nothing
// here calls into the library; tests compare the library against these.

#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

inline int deg(Mask a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }

inline Mask clmul(Mask a, Mask b) {
  Mask r = 0;
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1U) r ^= a << i;
  }
  return r;
}

inline std::pair<Mask, Mask> divmod(Mask a, Mask b) {
  Mask q = 0;
  while (deg(a) >= deg(b)) {
    int s = deg(a) - deg(b);
    q ^= Mask{1} << s;
    a ^= b << s;
  }
  return {q, a};
}

inline Mask mod(Mask a, Mask m) { return divmod(a, m).second; }
inline Mask mulmod(Mask a, Mask b, Mask m) { return mod(clmul(mod(a, m), mod(b, m)), m); }

/// Irreducible iff no polynomial of degree 1..deg/2 divides it.
inline bool irreducible_by_trial_division(Mask p) {
  const int n = deg(p);
  for (Mask d = 2; deg(d) <= n / 2; ++d) {
    if (mod(p, d) == 0) return false;
  }
  return n >= 1;
}

/// Order of x modulo p by enumerating powers; 0 if x is not a unit.
inline std::uint64_t order_of_x(Mask p) {
  if ((p & 1U) == 0) return 0;
  Mask v = mod(2, p);
  for (std::uint64_t k = 1; k <= (std::uint64_t{1} << deg(p)); ++k) {
    if (v == 1) return k;
    v = mulmod(v, 2, p);
  }
  return 0;
}

inline Mask fpow(Mask a, std::uint64_t e, Mask m) {
  Mask r = mod(1, m);
  for (std::uint64_t i = 0; i < e; ++i) r = mulmod(r, a, m);
  return r;
}

/// Trace by summing successive squares.
inline Mask trace(Mask a, Mask m) {
  Mask sum = 0, t = mod(a, m);
  for (int i = 0; i < deg(m); ++i) {
    sum ^= t;
    t = mulmod(t, t, m);
  }
  return sum;
}

/// det(x I - A) of the tridiagonal 90/150 matrix by Bareiss fraction-free
/// elimination over GF(2)[x].
inline Mask charpoly_by_elimination(const std::vector<int>& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<Mask>> m(n, std::vector<Mask>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 2 ^ static_cast<Mask>(d[i]);  // x + d_i
    if (i > 0) m[i][i - 1] = 1;
    if (i + 1 < n) m[i][i + 1] = 1;
  }
  Mask prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Mask num = clmul(m[k][k], m[i][j]) ^ clmul(m[i][k], m[k][j]);
        m[i][j] = divmod(num, prev).first;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1];
}

/// Naive double loop.
inline std::vector<long long> walsh_naive(const std::vector<std::uint8_t>& table) {
  std::vector<long long> w(table.size(), 0);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    for (std::size_t x = 0; x < table.size(); ++x) {
      int bit = table[x] ^ (std::popcount(mask & x) & 1);
      w[mask] += bit ? -1 : 1;
    }
  }
  return w;
}

/// All residues y mod p with y^2 + (x^2+x) p' y + 1 = 0.
inline std::vector<Mask> hca_congruence_brute(Mask p) {
  Mask deriv = 0;
  for (int i = 1; i <= deg(p); i += 2) {
    if ((p >> i) & 1U) deriv ^= Mask{1} << (i - 1);
  }
  const Mask b = mod(clmul(0b110, deriv), p);
  std::vector<Mask> out;
  for (Mask y = 0; y < (Mask{1} << deg(p)); ++y) {
    if ((mulmod(y, y, p) ^ mulmod(b, y, p) ^ mod(1, p)) == 0) out.push_back(y);
  }
  return out;
}

/// Characteristic polynomial of every length-n rule vector whose char poly
/// equals p, by direct elimination.
inline std::vector<std::vector<int>> rule_vectors_with_charpoly(Mask p) {
  std::vector<std::vector<int>> out;
  const int n = deg(p);
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = static_cast<int>((v >> i) & 1U);
    if (charpoly_by_elimination(d) == p) out.push_back(d);
  }
  return out;
}

/// Number of irreducible polynomials of degree n over GF(2):
/// (1/n) sum_{d | n} mu(d) 2^(n/d).
inline std::uint64_t necklace_count(int n) {
  auto mobius = [](int k) {
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
      if (k % p == 0) {
        k /= p;
        if (k % p == 0) return 0;
        result = -result;
      }
    }
    if (k > 1) result = -result;
    return result;
  };
  long long sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) sum += mobius(d) * (1LL << (n / d));
  }
  return static_cast<std::uint64_t>(sum / n);
}

}  // namespace oracle
