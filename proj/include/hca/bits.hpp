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

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hca {

/// Raised when an internal consistency check fails. Never expected for
/// valid input; indicates a bug rather than a caller error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One bit per element, each element 0 or 1.
using BitSequence = std::vector<std::uint8_t>;

inline std::string to_string(const BitSequence& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

/// Parses a string of '0'/'1' characters. Whitespace is skipped.
inline BitSequence parse_bits(std::string_view text) {
  BitSequence out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bit string contains non-binary character '" +
                                  std::string(1, c) + "'");
    }
  }
  return out;
}

namespace detail {

inline int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

inline std::string_view strip_hex_prefix(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
  }
  return text;
}

}  // namespace detail

/// Parses a hexadecimal number into `length` bits, bit i of the number
/// landing at index i. Set bits at or above `length` are rejected.
inline BitSequence parse_hex_bits(std::string_view text, std::size_t length) {
  text = detail::strip_hex_prefix(text);
  if (text.empty()) throw std::invalid_argument("empty hex string");
  BitSequence out(length, 0);
  std::size_t bit = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it, bit += 4) {
    int v = detail::hex_digit(*it);
    if (v < 0) {
      throw std::invalid_argument("invalid hex digit '" + std::string(1, *it) + "'");
    }
    for (int k = 0; k < 4; ++k) {
      if (((v >> k) & 1) == 0) continue;
      if (bit + k >= length) {
        throw std::invalid_argument("hex value does not fit in " +
                                    std::to_string(length) + " bits");
      }
      out[bit + k] = 1;
    }
  }
  return out;
}

/// Inverse of parse_hex_bits; emits "0x..." with no leading zero digits.
inline std::string to_hex(const BitSequence& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string rev;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int v = 0;
    for (std::size_t k = 0; k < 4 && i + k < bits.size(); ++k) v |= bits[i + k] << k;
    rev.push_back(kDigits[v]);
  }
  while (rev.size() > 1 && rev.back() == '0') rev.pop_back();
  if (rev.empty()) rev = "0";
  return "0x" + std::string(rev.rbegin(), rev.rend());
}

/// Packs bits into bytes, first bit in the most significant position.
/// A trailing partial byte is dropped.
inline std::vector<std::uint8_t> pack_bytes_msb_first(const BitSequence& bits) {
  std::vector<std::uint8_t> out(bits.size() / 8);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint8_t v = 0;
    for (std::size_t k = 0; k < 8; ++k) v = static_cast<std::uint8_t>((v << 1) | bits[8 * i + k]);
    out[i] = v;
  }
  return out;
}

inline BitSequence unpack_bytes_msb_first(const std::vector<std::uint8_t>& bytes) {
  BitSequence out;
  out.reserve(bytes.size() * 8);
  for (auto v : bytes) {
    for (int k = 7; k >= 0; --k) out.push_back((v >> k) & 1);
  }
  return out;
}

inline std::size_t weight(const BitSequence& bits) {
  std::size_t w = 0;
  for (auto b : bits) w += b;
  return w;
}

}  // namespace hca
