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

// Brute-force ground truth: Hamiltonian circle and path enumeration.
//
// Circles are enumerated with vertex 1 pinned first and the second vertex
// smaller than the last, so each undirected circle appears once and in
// canonical form. The DFS visits them in lexicographic order.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dsign/graph.hpp"

namespace dsign {

inline constexpr int kDefaultEnumerationBound = 10;

/// Hamiltonian circle counts per sign, plus the first circle found for
/// each realized sign.
struct Spectrum {
  int order = 0;
  SignCounts counts;
  std::array<std::optional<Circle>, 4> witnesses;

  SignSet realized() const { return counts.support(); }
  std::uint64_t total() const { return counts.total(); }
  const std::optional<Circle>& witness(F22 s) const { return witnesses[s.bits()]; }

  /// Adds the counts of `other`, keeping the lexicographically first witness.
  void merge(const Spectrum& other) {
    counts += other.counts;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& w = other.witnesses[i];
      if (!w) continue;
      auto& mine = witnesses[i];
      if (!mine || std::lexicographical_compare(w->vertices().begin(), w->vertices().end(),
                                                mine->vertices().begin(),
                                                mine->vertices().end())) {
        mine = w;
      }
    }
  }
};

/// (n - 1)! / 2 for n >= 3.
inline std::uint64_t hamiltonian_circle_count(int n) {
  if (n < 3) return 0;
  std::uint64_t f = 1;
  for (int k = 3; k < n; ++k) f *= static_cast<std::uint64_t>(k);
  return n == 3 ? 1 : f;
}

namespace detail {

inline void check_bound(int n, int bound, const char* what) {
  if (n > bound) {
    throw Error(std::string(what) + ": n = " + std::to_string(n) + " exceeds the enumeration bound " +
                std::to_string(bound));
  }
}

class CircleEnumerator {
 public:
  CircleEnumerator(const SignedCompleteGraph& g, Spectrum& out)
      : g_(g), n_(g.order()), out_(out), seq_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_ + 1), false) {
    seq_[0] = 1;
    used_[1] = true;
  }

  void run_from_second(Vertex second) {
    seq_[1] = second;
    used_[static_cast<std::size_t>(second)] = true;
    extend(2, g_.sign(1, second));
    used_[static_cast<std::size_t>(second)] = false;
  }

 private:
  void extend(int depth, F22 partial) {
    const Vertex prev = seq_[static_cast<std::size_t>(depth - 1)];
    if (depth == n_) {
      if (prev < seq_[1]) return;
      const F22 s = partial + g_.sign(prev, 1);
      out_.counts.add(s);
      auto& w = out_.witnesses[s.bits()];
      if (!w) w = Circle(seq_);
      return;
    }
    for (Vertex v = 2; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      // The last vertex must exceed the second; prune when only one slot is left.
      if (depth == n_ - 1 && v < seq_[1]) continue;
      used_[static_cast<std::size_t>(v)] = true;
      seq_[static_cast<std::size_t>(depth)] = v;
      extend(depth + 1, partial + g_.sign(prev, v));
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  const SignedCompleteGraph& g_;
  int n_;
  Spectrum& out_;
  std::vector<Vertex> seq_;
  std::vector<bool> used_;
};

}  // namespace detail

/// The circles whose second vertex is `second`; the partitions over
/// second = 2..n - 1 cover every circle once.
inline Spectrum hamiltonian_spectrum_partition(const SignedCompleteGraph& g, Vertex second) {
  Spectrum out;
  out.order = g.order();
  if (g.order() < 3) throw Error("a Hamiltonian circle needs at least 3 vertices");
  if (second < 2 || second >= g.order()) return out;
  detail::CircleEnumerator(g, out).run_from_second(second);
  return out;
}

/// Exact spectrum over all (n - 1)! / 2 Hamiltonian circles. With jobs > 1
/// the second-vertex partitions run on separate threads.
inline Spectrum hamiltonian_spectrum(const SignedCompleteGraph& g,
                                     int bound = kDefaultEnumerationBound, int jobs = 1) {
  const int n = g.order();
  if (n < 3) throw Error("a Hamiltonian circle needs at least 3 vertices");
  detail::check_bound(n, bound, "hamiltonian_spectrum");
  Spectrum out;
  out.order = n;
  if (jobs <= 1 || n <= 4) {
    for (Vertex s = 2; s < n; ++s) out.merge(hamiltonian_spectrum_partition(g, s));
    return out;
  }
  std::vector<Spectrum> parts(static_cast<std::size_t>(n));
  std::vector<std::thread> pool;
  const int workers = std::min(jobs, n - 2);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (Vertex s = 2 + w; s < n; s += workers) {
        parts[static_cast<std::size_t>(s)] = hamiltonian_spectrum_partition(g, s);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (Vertex s = 2; s < n; ++s) out.merge(parts[static_cast<std::size_t>(s)]);
  return out;
}

/// Every Hamiltonian circle of K_n as a list of edge indices, built once
/// per order and reused across instances. Gives the same counts as
/// hamiltonian_spectrum at a fraction of the cost for bulk sweeps.
class CircleTable {
 public:
  explicit CircleTable(int n, int bound = 8) : n_(n) {
    if (n < 3) throw Error("a Hamiltonian circle needs at least 3 vertices");
    detail::check_bound(n, bound, "CircleTable");
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    seq[0] = 1;
    used[1] = true;
    build(seq, used, 1);
  }

  int order() const { return n_; }
  std::size_t size() const { return circles_.size(); }
  const std::vector<std::vector<Vertex>>& circles() const { return circles_; }

  F22 sign_of(const SignedCompleteGraph& g, std::size_t i) const {
    const auto signs = g.edge_signs();
    F22 s;
    const std::size_t k = static_cast<std::size_t>(n_);
    for (std::size_t j = 0; j < k; ++j) s += signs[index_[i * k + j]];
    return s;
  }

  /// Realized sign set only; stops early once all four appear.
  SignSet realized(const SignedCompleteGraph& g) const {
    require_order(g);
    SignSet out;
    for (std::size_t i = 0; i < circles_.size() && !out.is_full(); ++i) out.insert(sign_of(g, i));
    return out;
  }

  SignCounts counts(const SignedCompleteGraph& g) const {
    require_order(g);
    SignCounts out;
    for (std::size_t i = 0; i < circles_.size(); ++i) out.add(sign_of(g, i));
    return out;
  }

 private:
  void require_order(const SignedCompleteGraph& g) const {
    if (g.order() != n_) {
      throw Error("circle table built for n = " + std::to_string(n_) + ", graph has n = " +
                  std::to_string(g.order()));
    }
  }

  void build(std::vector<Vertex>& seq, std::vector<bool>& used, int depth) {
    if (depth == n_) {
      if (seq.back() < seq[1]) return;
      circles_.push_back(seq);
      for (int j = 0; j < n_; ++j) {
        index_.push_back(SignedCompleteGraph::edge_index(
            n_, seq[static_cast<std::size_t>(j)], seq[static_cast<std::size_t>((j + 1) % n_)]));
      }
      return;
    }
    for (Vertex v = 2; v <= n_; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      seq[static_cast<std::size_t>(depth)] = v;
      build(seq, used, depth + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  }

  int n_;
  std::vector<std::vector<Vertex>> circles_;
  std::vector<std::size_t> index_;
};

/// Signs of all (n - 1)! Hamiltonian paths starting at `start`.
inline SignCounts hamiltonian_paths_spectrum(const SignedCompleteGraph& g, Vertex start,
                                             int bound = kDefaultEnumerationBound) {
  const int n = g.order();
  if (!g.has_vertex(start)) throw Error("unknown start vertex " + std::to_string(start));
  detail::check_bound(n, bound, "hamiltonian_paths_spectrum");
  SignCounts out;
  if (n == 1) return out;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  used[static_cast<std::size_t>(start)] = true;
  auto rec = [&](auto&& self, Vertex prev, int depth, F22 partial) -> void {
    if (depth == n) {
      out.add(partial);
      return;
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      self(self, v, depth + 1, partial + g.sign(prev, v));
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, start, 1, kE);
  return out;
}

struct SignedPath {
  Path path;
  F22 sign;
};

/// The 12 Hamiltonian paths of a doubly signed K4.
struct PathMultisetReport {
  /// Undirected paths, each listed once from its smaller endpoint.
  std::vector<SignedPath> paths;
  /// Paths grouped by endpoint pair: {1,2}|{3,4}, {1,4}|{2,3}, {1,3}|{2,4}.
  std::array<std::vector<SignedPath>, 3> groups;
  /// per_start[i] holds the six directed paths from vertex i + 1.
  std::array<SignCounts, 4> per_start;
  SignCounts totals;
};

inline int k4_endpoint_group(Vertex x, Vertex y) {
  const Edge e(x, y);
  if (e == Edge(1, 2) || e == Edge(3, 4)) return 0;
  if (e == Edge(1, 4) || e == Edge(2, 3)) return 1;
  return 2;
}

inline PathMultisetReport k4_path_report(const SignedCompleteGraph& g) {
  if (g.order() != 4) {
    throw Error("k4_path_report needs n = 4, got n = " + std::to_string(g.order()));
  }
  PathMultisetReport out;
  std::array<Vertex, 4> p{1, 2, 3, 4};
  do {
    const F22 s = g.sign(p[0], p[1]) + g.sign(p[1], p[2]) + g.sign(p[2], p[3]);
    out.per_start[static_cast<std::size_t>(p[0] - 1)].add(s);
    if (p[0] > p[3]) continue;
    SignedPath sp{Path({p[0], p[1], p[2], p[3]}), s};
    out.groups[static_cast<std::size_t>(k4_endpoint_group(p[0], p[3]))].push_back(sp);
    out.paths.push_back(std::move(sp));
    out.totals.add(s);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace dsign
