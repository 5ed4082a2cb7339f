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

// Instance generators: the hub-normalized exhaustive stream, seeded random
// labelings and a few named instances.

#pragma once

#include <charconv>
#include <cstdint>
#include <iterator>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dsign/graph.hpp"

namespace dsign {

/// Every labeling of K_n with the edges at vertex 1 fixed to e. The free
/// edges are the pairs of {2..n} in lexicographic order; free edge k takes
/// base-4 digit k of the index, so index 0 is the all-identity graph.
class NormalizedLabelings {
 public:
  static constexpr int kMinOrder = 4;
  static constexpr int kMaxOrder = 7;

  explicit NormalizedLabelings(int n) : n_(n) {
    if (n < kMinOrder || n > kMaxOrder) {
      throw Error("exhaustive normalized labelings support 4 <= n <= 7, got n = " +
                  std::to_string(n));
    }
    free_edges_ = (n - 1) * (n - 2) / 2;
    size_ = std::uint64_t{1} << (2 * free_edges_);
  }

  int order() const { return n_; }
  int free_edge_count() const { return free_edges_; }
  std::uint64_t size() const { return size_; }

  SignedCompleteGraph at(std::uint64_t index) const {
    if (index >= size_) throw Error("labeling index " + std::to_string(index) + " out of range");
    std::vector<F22> signs(SignedCompleteGraph::pair_count(n_));
    // The first n - 1 slots are the edges at vertex 1 and stay e.
    for (std::size_t k = static_cast<std::size_t>(n_ - 1); k < signs.size(); ++k) {
      signs[k] = F22::from_bits(static_cast<unsigned>(index & 3u));
      index >>= 2;
    }
    return SignedCompleteGraph(n_, std::move(signs));
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SignedCompleteGraph;
    using difference_type = std::ptrdiff_t;

    iterator(const NormalizedLabelings* owner, std::uint64_t i) : owner_(owner), i_(i) {}
    SignedCompleteGraph operator*() const { return owner_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    std::uint64_t index() const { return i_; }
    friend bool operator==(const iterator& x, const iterator& y) { return x.i_ == y.i_; }

   private:
    const NormalizedLabelings* owner_;
    std::uint64_t i_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  int n_;
  int free_edges_ = 0;
  std::uint64_t size_ = 0;
};

inline NormalizedLabelings gen_exhaustive_normalized(int n) { return NormalizedLabelings(n); }

/// All 4^6 labelings of K4, indexed like NormalizedLabelings but with every
/// edge free (edge k in edge_index order takes digit k).
inline SignedCompleteGraph k4_labeling(std::uint32_t index) {
  if (index >= 4096) throw Error("K4 labeling index out of range");
  std::vector<F22> signs(6);
  for (auto& s : signs) {
    s = F22::from_bits(index & 3u);
    index >>= 2;
  }
  return SignedCompleteGraph(4, std::move(signs));
}

/// Uniform independent edge signs from mt19937_64, two high bits per edge.
inline SignedCompleteGraph gen_random(int n, std::uint64_t seed) {
  if (n < 3) throw Error("gen_random needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<F22> signs(SignedCompleteGraph::pair_count(n));
  for (auto& s : signs) s = F22::from_bits(static_cast<unsigned>(rng() >> 62));
  return SignedCompleteGraph(n, std::move(signs));
}

/// splitmix64 finalizer over (seed, index); gives per-instance seeds for
/// batch runs that can be replayed one instance at a time.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline SignedCompleteGraph share_vertex_k4() {
  const SignedEdge edges[] = {{1, 2, kB}, {1, 3, kC}, {1, 4, kA},
                              {2, 3, kE}, {3, 4, kA}, {2, 4, kA}};
  return SignedCompleteGraph::build(4, edges);
}

inline SignedCompleteGraph triangle_k4() {
  const SignedEdge edges[] = {{1, 2, kA}, {1, 3, kA}, {1, 4, kE},
                              {2, 3, kA}, {3, 4, kB}, {2, 4, kC}};
  return SignedCompleteGraph::build(4, edges);
}

/// "share_vertex_k4", "triangle_k4" or "identity(N)".
inline SignedCompleteGraph named_instance(std::string_view name) {
  if (name == "share_vertex_k4") return share_vertex_k4();
  if (name == "triangle_k4") return triangle_k4();
  constexpr std::string_view prefix = "identity(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    const std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) {
      return SignedCompleteGraph(n);
    }
  }
  throw Error("unknown instance name \"" + std::string(name) +
              "\" (expected share_vertex_k4, triangle_k4 or identity(N))");
}

}  // namespace dsign
