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

// The doubly signed complete graph and sign evaluation of walks.
//
// Vertices are 1-based and contiguous. Edge signs live in a flat upper
// triangular array; `sign(u, v)` is symmetric and O(1).

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsign/error.hpp"
#include "dsign/group.hpp"

namespace dsign {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr bool shares_vertex(Edge other) const {
    return touches(other.u) || touches(other.v);
  }

  friend constexpr bool operator==(Edge, Edge) = default;
  friend constexpr auto operator<=>(Edge, Edge) = default;
};

inline std::string to_string(Edge e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

struct SignedEdge {
  Vertex u = 0;
  Vertex v = 0;
  F22 sign;
};

class SignedCompleteGraph {
 public:
  /// The complete graph on n vertices with every edge labeled `fill`.
  explicit SignedCompleteGraph(int n, F22 fill = kE)
      : n_(checked_order(n)), signs_(pair_count(n), fill) {}

  /// Takes ownership of signs listed in `edge_index` order.
  SignedCompleteGraph(int n, std::vector<F22> triangular)
      : n_(checked_order(n)), signs_(std::move(triangular)) {
    if (signs_.size() != pair_count(n)) {
      throw Error("expected " + std::to_string(pair_count(n)) + " edge signs, got " +
                  std::to_string(signs_.size()));
    }
  }

  /// Validates that every unordered pair is listed exactly once.
  static SignedCompleteGraph build(int n, std::span<const SignedEdge> edges) {
    checked_order(n);
    std::vector<F22> signs(pair_count(n));
    std::vector<bool> seen(pair_count(n), false);
    for (const SignedEdge& e : edges) {
      if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
        throw Error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                    " has a vertex outside 1.." + std::to_string(n));
      }
      if (e.u == e.v) throw Error("loop at vertex " + std::to_string(e.u));
      const std::size_t i = edge_index(n, e.u, e.v);
      if (seen[i]) throw Error("duplicate edge " + to_string(Edge(e.u, e.v)));
      seen[i] = true;
      signs[i] = e.sign;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) throw Error("missing edge " + to_string(edge_at(n, i)));
    }
    return SignedCompleteGraph(n, std::move(signs));
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return signs_.size(); }
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

  /// Unchecked lookup; u != v, both in range.
  F22 sign(Vertex u, Vertex v) const { return signs_[edge_index(n_, u, v)]; }
  F22 sign(Edge e) const { return sign(e.u, e.v); }

  std::span<const F22> edge_signs() const { return signs_; }

  std::vector<SignedEdge> signed_edges() const {
    std::vector<SignedEdge> out;
    out.reserve(signs_.size());
    for (std::size_t i = 0; i < signs_.size(); ++i) {
      const Edge e = edge_at(n_, i);
      out.push_back({e.u, e.v, signs_[i]});
    }
    return out;
  }

  static constexpr std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  }

  /// Position of {u, v} in the triangular array (lexicographic by (min, max)).
  static constexpr std::size_t edge_index(int n, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    const auto i = static_cast<std::size_t>(u - 1);
    const auto j = static_cast<std::size_t>(v - 1);
    return i * (2 * static_cast<std::size_t>(n) - i - 1) / 2 + (j - i - 1);
  }

  static Edge edge_at(int n, std::size_t index) {
    Vertex u = 1;
    std::size_t row = static_cast<std::size_t>(n - 1);
    while (index >= row) {
      index -= row;
      --row;
      ++u;
    }
    return Edge(u, u + 1 + static_cast<Vertex>(index));
  }

  friend bool operator==(const SignedCompleteGraph&, const SignedCompleteGraph&) = default;

 private:
  static int checked_order(int n) {
    if (n < 1) throw Error("graph order must be positive, got " + std::to_string(n));
    return n;
  }

  int n_;
  std::vector<F22> signs_;
};

namespace detail {

inline void require_distinct(std::span<const Vertex> vs, const char* what) {
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(std::string(what) + " has a repeated vertex");
  }
  if (!sorted.empty() && sorted.front() < 1) {
    throw Error(std::string(what) + " has a non-positive vertex id");
  }
}

inline std::string join(std::span<const Vertex> vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace detail

/// A simple cycle given as a cyclic vertex sequence of length >= 3.
///
/// Equality ignores rotation and reflection. The canonical form starts at
/// the smallest vertex and continues toward its smaller neighbor.
class Circle {
 public:
  explicit Circle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw Error("a circle needs at least 3 vertices");
    detail::require_distinct(vertices_, "circle");
  }

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(Vertex v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    }
    return out;
  }

  bool has_edge(Edge e) const {
    const std::size_t k = vertices_.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (Edge(vertices_[i], vertices_[(i + 1) % k]) == e) return true;
    }
    return false;
  }

  Circle canonical() const {
    const std::size_t k = vertices_.size();
    const auto start = static_cast<std::size_t>(
        std::min_element(vertices_.begin(), vertices_.end()) - vertices_.begin());
    const Vertex next = vertices_[(start + 1) % k];
    const Vertex prev = vertices_[(start + k - 1) % k];
    std::vector<Vertex> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t idx = next < prev ? (start + i) % k : (start + k - i) % k;
      out.push_back(vertices_[idx]);
    }
    return Circle(std::move(out), Trusted{});
  }

  std::string to_string() const { return detail::join(vertices_); }

  friend bool operator==(const Circle& x, const Circle& y) {
    return x.canonical().vertices_ == y.canonical().vertices_;
  }

 private:
  struct Trusted {};
  Circle(std::vector<Vertex> vertices, Trusted) : vertices_(std::move(vertices)) {}

  std::vector<Vertex> vertices_;
};

/// An open walk without repeated vertices, at least one edge long.
/// Equality ignores orientation.
class Path {
 public:
  explicit Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw Error("a path needs at least 2 vertices");
    detail::require_distinct(vertices_, "path");
  }

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      out.emplace_back(vertices_[i], vertices_[i + 1]);
    }
    return out;
  }

  Path canonical() const {
    std::vector<Vertex> rev(vertices_.rbegin(), vertices_.rend());
    return Path(std::min(vertices_, rev));
  }

  std::string to_string() const { return detail::join(vertices_); }

  friend bool operator==(const Path& x, const Path& y) {
    return x.canonical().vertices_ == y.canonical().vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
};

class Triangle {
 public:
  Triangle(Vertex x, Vertex y, Vertex z) : v_{x, y, z} {
    std::sort(v_.begin(), v_.end());
    if (v_[0] == v_[1] || v_[1] == v_[2]) throw Error("degenerate triangle");
    if (v_[0] < 1) throw Error("triangle has a non-positive vertex id");
  }

  const std::array<Vertex, 3>& vertices() const { return v_; }
  bool contains(Vertex x) const { return v_[0] == x || v_[1] == x || v_[2] == x; }
  std::array<Edge, 3> edges() const {
    return {Edge(v_[0], v_[1]), Edge(v_[0], v_[2]), Edge(v_[1], v_[2])};
  }

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;

  std::string to_string() const {
    return "T" + std::to_string(v_[0]) + "," + std::to_string(v_[1]) + "," +
           std::to_string(v_[2]);
  }

 private:
  std::array<Vertex, 3> v_;
};

namespace detail {

inline void require_in_graph(const SignedCompleteGraph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (!g.has_vertex(v)) {
      throw Error("unknown vertex " + std::to_string(v) + " (graph has " +
                  std::to_string(g.order()) + " vertices)");
    }
  }
}

}  // namespace detail

/// Group sum of the edge labels along the path.
inline F22 walk_sign(const SignedCompleteGraph& g, const Path& p) {
  detail::require_in_graph(g, p.vertices());
  F22 s;
  const auto vs = p.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) s += g.sign(vs[i], vs[i + 1]);
  return s;
}

/// Group sum of the edge labels around the circle, closing edge included.
inline F22 walk_sign(const SignedCompleteGraph& g, const Circle& c) {
  detail::require_in_graph(g, c.vertices());
  F22 s;
  const auto vs = c.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) s += g.sign(vs[i], vs[(i + 1) % vs.size()]);
  return s;
}

inline F22 triangle_sign(const SignedCompleteGraph& g, const Triangle& t) {
  detail::require_in_graph(g, t.vertices());
  const auto& v = t.vertices();
  return g.sign(v[0], v[1]) + g.sign(v[0], v[2]) + g.sign(v[1], v[2]);
}

/// Unchecked triangle sign for hot loops.
inline F22 triangle_sign(const SignedCompleteGraph& g, Vertex x, Vertex y, Vertex z) {
  return g.sign(x, y) + g.sign(x, z) + g.sign(y, z);
}

/// H symmetric-difference T: replaces the circle edge (i, j) of `h` by the
/// two edges (i, v), (v, j), where v is the vertex of `t` not on `h`.
/// The resulting sign is walk_sign(h) + triangle_sign(t).
inline Circle circle_symmetric_difference(const SignedCompleteGraph& g, const Circle& h,
                                          const Triangle& t) {
  detail::require_in_graph(g, h.vertices());
  detail::require_in_graph(g, t.vertices());
  std::vector<Vertex> off;
  std::vector<Vertex> on;
  for (Vertex x : t.vertices()) (h.contains(x) ? on : off).push_back(x);
  if (off.size() != 1) {
    throw Error("triangle " + t.to_string() +
                " must have exactly one vertex off the circle, found " +
                std::to_string(off.size()));
  }
  const Edge target(on[0], on[1]);
  const auto vs = h.vertices();
  const std::size_t k = vs.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (Edge(vs[i], vs[(i + 1) % k]) != target) continue;
    std::vector<Vertex> out(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    out.push_back(off[0]);
    out.insert(out.end(), vs.begin() + static_cast<std::ptrdiff_t>(i) + 1, vs.end());
    return Circle(std::move(out));
  }
  throw Error("edge " + to_string(target) + " is not on the circle");
}

/// The vertex-insertion move on a circle: put `v` between positions
/// `i` and `i + 1` (cyclically). `v` must not be on the circle.
inline Circle insert_vertex(const Circle& h, std::size_t i, Vertex v) {
  const auto vs = h.vertices();
  std::vector<Vertex> out(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  out.push_back(v);
  out.insert(out.end(), vs.begin() + static_cast<std::ptrdiff_t>(i) + 1, vs.end());
  return Circle(std::move(out));
}

/// The complete graph induced on `vertices`, relabeled so that
/// `vertices[k]` becomes vertex k + 1.
inline SignedCompleteGraph induced_subgraph(const SignedCompleteGraph& g,
                                            std::span<const Vertex> vertices) {
  detail::require_in_graph(g, vertices);
  detail::require_distinct(vertices, "vertex selection");
  const int k = static_cast<int>(vertices.size());
  std::vector<F22> signs;
  signs.reserve(SignedCompleteGraph::pair_count(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) signs.push_back(g.sign(vertices[i], vertices[j]));
  }
  return SignedCompleteGraph(k, std::move(signs));
}

/// Relabeling: new vertex i is old vertex perm[i - 1]. `perm` must be a
/// permutation of 1..n.
inline SignedCompleteGraph relabeled(const SignedCompleteGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error("relabeling must list every vertex exactly once");
  }
  return induced_subgraph(g, perm);
}

}  // namespace dsign
