// Copyright 2026 The dsign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Arithmetic in the Klein four-group F2^2 = {e, a, b, c}.
//
// Elements are stored as two bits (b1 b0): e = 00, a = 01, b = 10, c = 11.
// Addition is XOR, so every element is its own inverse and the sum of any
// two distinct non-identity elements is the third one.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

#include "dsign/error.hpp"

namespace dsign {

class F22 {
 public:
  constexpr F22() = default;

  static constexpr F22 from_bits(unsigned bits) {
    return F22(static_cast<std::uint8_t>(bits & 3u));
  }

  constexpr unsigned bits() const { return bits_; }
  constexpr bool is_identity() const { return bits_ == 0; }

  /// 'e', 'a', 'b' or 'c'.
  constexpr char name() const { return "eabc"[bits_]; }

  friend constexpr F22 operator+(F22 x, F22 y) {
    return F22(static_cast<std::uint8_t>(x.bits_ ^ y.bits_));
  }
  constexpr F22& operator+=(F22 other) {
    bits_ ^= other.bits_;
    return *this;
  }

  friend constexpr bool operator==(F22, F22) = default;
  friend constexpr auto operator<=>(F22, F22) = default;

 private:
  constexpr explicit F22(std::uint8_t bits) : bits_(bits) {}

  std::uint8_t bits_ = 0;
};

inline constexpr F22 kE = F22::from_bits(0);
inline constexpr F22 kA = F22::from_bits(1);
inline constexpr F22 kB = F22::from_bits(2);
inline constexpr F22 kC = F22::from_bits(3);

inline constexpr std::array<F22, 4> kAllElements = {kE, kA, kB, kC};

inline std::string to_string(F22 x) { return std::string(1, x.name()); }

inline std::ostream& operator<<(std::ostream& os, F22 x) { return os << x.name(); }

/// Accepts "e|a|b|c" and the bit pairs "00|01|10|11".
inline F22 parse_f22(std::string_view token) {
  if (token.size() == 1) {
    switch (token[0]) {
      case 'e': return kE;
      case 'a': return kA;
      case 'b': return kB;
      case 'c': return kC;
      default: break;
    }
  } else if (token.size() == 2 && (token[0] == '0' || token[0] == '1') &&
             (token[1] == '0' || token[1] == '1')) {
    return F22::from_bits(static_cast<unsigned>((token[0] - '0') * 2 + (token[1] - '0')));
  }
  throw Error("bad sign token \"" + std::string(token) + "\"");
}

/// x + y + z for pairwise distinct arguments, i.e. the element missing from {x, y, z}.
inline F22 fourth_element(F22 x, F22 y, F22 z) {
  if (x == y || x == z || y == z) {
    throw Error("fourth_element: arguments must be pairwise distinct");
  }
  return x + y + z;
}

/// A subset of F2^2 as a 4-bit mask.
class SignSet {
 public:
  constexpr SignSet() = default;
  constexpr SignSet(std::initializer_list<F22> elements) {
    for (F22 x : elements) insert(x);
  }
  static constexpr SignSet from_mask(unsigned mask) {
    SignSet s;
    s.mask_ = static_cast<std::uint8_t>(mask & 0xFu);
    return s;
  }
  static constexpr SignSet full() { return from_mask(0xF); }

  constexpr void insert(F22 x) { mask_ |= static_cast<std::uint8_t>(1u << x.bits()); }
  constexpr bool contains(F22 x) const { return (mask_ >> x.bits()) & 1u; }
  constexpr int size() const { return std::popcount(static_cast<unsigned>(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool is_full() const { return mask_ == 0xF; }
  constexpr unsigned mask() const { return mask_; }
  constexpr bool subset_of(SignSet other) const { return (mask_ & ~other.mask_) == 0; }

  friend constexpr bool operator==(SignSet, SignSet) = default;

  /// "{e,a,c}" in e, a, b, c order.
  std::string to_string() const {
    std::string out = "{";
    for (F22 x : kAllElements) {
      if (!contains(x)) continue;
      if (out.size() > 1) out += ',';
      out += x.name();
    }
    return out + "}";
  }

 private:
  std::uint8_t mask_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, SignSet s) { return os << s.to_string(); }

/// A multiset over F2^2, stored as one counter per element.
class SignCounts {
 public:
  constexpr SignCounts() = default;

  constexpr void add(F22 x, std::uint64_t times = 1) { counts_[x.bits()] += times; }
  constexpr std::uint64_t count(F22 x) const { return counts_[x.bits()]; }
  constexpr std::uint64_t total() const {
    return counts_[0] + counts_[1] + counts_[2] + counts_[3];
  }
  constexpr SignSet support() const {
    SignSet s;
    for (F22 x : kAllElements) {
      if (count(x) > 0) s.insert(x);
    }
    return s;
  }
  constexpr int distinct() const { return support().size(); }

  /// Multiplicities sorted descending, e.g. {2,2,2,0} for {p,p,q,q,s,s}.
  constexpr std::array<std::uint64_t, 4> shape() const {
    auto s = counts_;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }

  constexpr SignCounts& operator+=(const SignCounts& other) {
    for (std::size_t i = 0; i < 4; ++i) counts_[i] += other.counts_[i];
    return *this;
  }

  friend constexpr bool operator==(const SignCounts&, const SignCounts&) = default;

  /// "{e:2,b:2,c:2}" listing only elements that occur.
  std::string to_string() const {
    std::string out = "{";
    for (F22 x : kAllElements) {
      if (count(x) == 0) continue;
      if (out.size() > 1) out += ',';
      out += x.name();
      out += ':';
      out += std::to_string(count(x));
    }
    return out + "}";
  }

 private:
  std::array<std::uint64_t, 4> counts_{};
};

/// The multiset {y_i + z_j : i, j in {1, 2}}.
///
/// When exactly one of y1, y2 lies in {z1, z2} the result covers F2^2; when
/// {z1, z2} equals {y1, y2} or its complement the result has shape {x,x,y,y}.
inline SignCounts pair_sums(F22 y1, F22 y2, F22 z1, F22 z2) {
  if (y1 == y2) throw Error("pair_sums: y1 and y2 must be distinct");
  if (y1.is_identity() || y2.is_identity()) throw Error("pair_sums: y1 and y2 must be non-identity");
  if (z1 == z2) throw Error("pair_sums: z1 and z2 must be distinct");
  SignCounts out;
  out.add(y1 + z1);
  out.add(y1 + z2);
  out.add(y2 + z1);
  out.add(y2 + z2);
  return out;
}

}  // namespace dsign
