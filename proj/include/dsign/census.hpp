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

// Triangle-sign censuses, K4 classification and the structural finders
// used by the witness constructions. Every finder breaks ties
// lexicographically so results are reproducible.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsign/graph.hpp"
#include "dsign/switching.hpp"

namespace dsign {

struct TriangleCensus {
  SignCounts counts;

  /// Number of distinct triangle signs, 0 when the graph has no triangle.
  int diversity() const { return counts.distinct(); }
  SignSet signs() const { return counts.support(); }
};

inline TriangleCensus triangle_census(const SignedCompleteGraph& g) {
  TriangleCensus out;
  const int n = g.order();
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const F22 ij = g.sign(i, j);
      for (Vertex k = j + 1; k <= n; ++k) out.counts.add(ij + g.sign(i, k) + g.sign(j, k));
    }
  }
  return out;
}

enum class K4Kind { kAllDistinct, kTwoTwo };
enum class TripleShape { kStar, kTriangle };

inline const char* to_string(TripleShape s) {
  return s == TripleShape::kStar ? "star" : "triangle";
}

/// Exactly three edges of one sign that share a vertex or close a triangle.
struct CommonSignTriple {
  F22 sign;
  TripleShape shape = TripleShape::kStar;
  std::array<Edge, 3> edges;
};

struct K4Class {
  K4Kind kind = K4Kind::kTwoTwo;
  /// Sorted; the triangle signs are listed as T(012), T(013), T(023), T(123)
  /// over these positions.
  std::array<Vertex, 4> vertices{};
  std::array<F22, 4> triangle_signs{};
  /// For kTwoTwo: the paired values, x <= y (x == y when all four agree).
  F22 x, y;
  /// Only searched for kAllDistinct.
  std::optional<CommonSignTriple> triple;

  bool is_all_distinct() const { return kind == K4Kind::kAllDistinct; }
  bool has_common_sign_triple() const { return triple.has_value(); }
};

/// The three-edge subsets of one sign class, if there is exactly one such
/// class with three edges forming a star or a triangle.
inline std::optional<CommonSignTriple> find_common_sign_triple(const SignedCompleteGraph& g,
                                                               const std::array<Vertex, 4>& vs) {
  for (F22 s : kAllElements) {
    std::vector<Edge> es;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (g.sign(vs[i], vs[j]) == s) es.emplace_back(vs[i], vs[j]);
      }
    }
    if (es.size() != 3) continue;
    std::array<Vertex, 6> ends{es[0].u, es[0].v, es[1].u, es[1].v, es[2].u, es[2].v};
    std::sort(ends.begin(), ends.end());
    const auto distinct = std::unique(ends.begin(), ends.end()) - ends.begin();
    const std::array<Edge, 3> edges{es[0], es[1], es[2]};
    if (distinct == 3) return CommonSignTriple{s, TripleShape::kTriangle, edges};
    for (Vertex c : vs) {
      if (es[0].touches(c) && es[1].touches(c) && es[2].touches(c)) {
        return CommonSignTriple{s, TripleShape::kStar, edges};
      }
    }
  }
  return std::nullopt;
}

inline K4Class classify_k4(const SignedCompleteGraph& g, std::array<Vertex, 4> vs) {
  detail::require_in_graph(g, vs);
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
    throw Error("classify_k4 needs four distinct vertices");
  }
  K4Class out;
  out.vertices = vs;
  out.triangle_signs = {triangle_sign(g, vs[0], vs[1], vs[2]), triangle_sign(g, vs[0], vs[1], vs[3]),
                        triangle_sign(g, vs[0], vs[2], vs[3]), triangle_sign(g, vs[1], vs[2], vs[3])};
  SignCounts counts;
  for (F22 t : out.triangle_signs) counts.add(t);
  if (counts.distinct() == 4) {
    out.kind = K4Kind::kAllDistinct;
    out.triple = find_common_sign_triple(g, vs);
    return out;
  }
  // The four signs always sum to e, so anything short of all-distinct pairs up.
  out.kind = K4Kind::kTwoTwo;
  auto sorted = out.triangle_signs;
  std::sort(sorted.begin(), sorted.end());
  if (sorted[0] != sorted[1] || sorted[2] != sorted[3]) {
    throw TheoryViolation("K4 triangle signs do not pair up");
  }
  out.x = sorted[0];
  out.y = sorted[2];
  return out;
}

/// Lexicographically first four-vertex set whose triangles have pairwise
/// distinct signs.
inline std::optional<std::array<Vertex, 4>> find_sigma4_star(const SignedCompleteGraph& g) {
  const int n = g.order();
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      const F22 ab = g.sign(a, b);
      for (Vertex c = b + 1; c <= n; ++c) {
        const F22 abc = ab + g.sign(a, c) + g.sign(b, c);
        for (Vertex d = c + 1; d <= n; ++d) {
          const F22 abd = ab + g.sign(a, d) + g.sign(b, d);
          const F22 acd = g.sign(a, c) + g.sign(a, d) + g.sign(c, d);
          const F22 bcd = g.sign(b, c) + g.sign(b, d) + g.sign(c, d);
          if (SignSet{abc, abd, acd, bcd}.is_full()) return std::array<Vertex, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

/// Per-K4 tallies for reports.
struct K4Summary {
  std::uint64_t total = 0;
  std::uint64_t two_two = 0;
  std::uint64_t all_distinct = 0;
  std::uint64_t triple_star = 0;
  std::uint64_t triple_triangle = 0;
};

inline K4Summary summarize_k4s(const SignedCompleteGraph& g) {
  K4Summary s;
  const int n = g.order();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c)
        for (Vertex d = c + 1; d <= n; ++d) {
          const K4Class k = classify_k4(g, {a, b, c, d});
          ++s.total;
          if (!k.is_all_distinct()) {
            ++s.two_two;
            continue;
          }
          ++s.all_distinct;
          if (k.triple) ++(k.triple->shape == TripleShape::kStar ? s.triple_star : s.triple_triangle);
        }
  return s;
}

/// Ordered (a, b, c, d), all distinct and different from the hub, with
/// T(hub,a,b), T(hub,b,c), T(hub,c,d) pairwise distinct.
using ConsecutiveTriple = std::array<Vertex, 4>;

inline std::optional<ConsecutiveTriple> find_consecutive_distinct_triple(
    const SignedCompleteGraph& g, Vertex hub) {
  const int n = g.order();
  if (n < 5 || !g.has_vertex(hub)) return std::nullopt;
  auto t = [&](Vertex x, Vertex y) { return triangle_sign(g, hub, x, y); };
  for (Vertex a = 1; a <= n; ++a) {
    if (a == hub) continue;
    for (Vertex b = 1; b <= n; ++b) {
      if (b == hub || b == a) continue;
      const F22 x = t(a, b);
      for (Vertex c = 1; c <= n; ++c) {
        if (c == hub || c == a || c == b) continue;
        const F22 y = t(b, c);
        if (y == x) continue;
        for (Vertex d = 1; d <= n; ++d) {
          if (d == hub || d == a || d == b || d == c) continue;
          const F22 z = t(c, d);
          if (z != x && z != y) return ConsecutiveTriple{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

/// Two hub triangles T(hub,a,b), T(hub,b,c) sharing the hub edge (hub, b)
/// with different signs, plus an edge-disjoint hub triangle T(hub,d,f)
/// whose sign differs from both.
struct SharedEdgeConfiguration {
  Vertex a = 0, b = 0, c = 0, d = 0, f = 0;
};

inline std::optional<SharedEdgeConfiguration> find_shared_edge_configuration(
    const SignedCompleteGraph& g, Vertex hub) {
  const int n = g.order();
  if (n < 6 || !g.has_vertex(hub)) return std::nullopt;
  auto t = [&](Vertex x, Vertex y) { return triangle_sign(g, hub, x, y); };
  for (Vertex a = 1; a <= n; ++a) {
    if (a == hub) continue;
    for (Vertex b = 1; b <= n; ++b) {
      if (b == hub || b == a) continue;
      const F22 x = t(a, b);
      for (Vertex c = 1; c <= n; ++c) {
        if (c == hub || c == a || c == b) continue;
        const F22 y = t(b, c);
        if (y == x) continue;
        for (Vertex d = 1; d <= n; ++d) {
          if (d == hub || d == a || d == b || d == c) continue;
          for (Vertex f = d + 1; f <= n; ++f) {
            if (f == hub || f == a || f == b || f == c) continue;
            const F22 z = t(d, f);
            if (z != x && z != y) return SharedEdgeConfiguration{a, b, c, d, f};
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// How four edges with pairwise distinct signs sit in K_n minus the hub.
enum class ForestCase {
  kCommonVertex = 1,        // all four share one vertex
  kStarWithAttached = 2,    // three share a vertex, the fourth hangs off a leaf
  kStarWithDisjoint = 3,    // three share a vertex, the fourth is disjoint
  kLinearForest = 4,        // no vertex meets more than two of them
};

inline const char* to_string(ForestCase c) {
  switch (c) {
    case ForestCase::kCommonVertex: return "common vertex";
    case ForestCase::kStarWithAttached: return "star with attached edge";
    case ForestCase::kStarWithDisjoint: return "star with disjoint edge";
    case ForestCase::kLinearForest: return "linear forest";
  }
  return "?";
}

struct EdgeStructure {
  ForestCase kind = ForestCase::kLinearForest;
  std::array<Edge, 4> edges{};  // edges[i] carries sign kAllElements[i] when chosen by sign
  Vertex center = 0;            // shared vertex unless the edges form a linear forest
};

/// Classifies four distinct edges. Throws TheoryViolation if they contain a
/// circle (a 4-circle or a triangle).
inline EdgeStructure distinct_sign_edge_structure(const std::array<Edge, 4>& edges) {
  for (int i = 0; i < 4; ++i) {
    if (edges[i].u == edges[i].v) throw Error("degenerate edge");
    for (int j = i + 1; j < 4; ++j) {
      if (edges[i] == edges[j]) throw Error("edges must be distinct");
    }
  }
  std::vector<Vertex> verts;
  for (Edge e : edges) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto idx = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Edge e : edges) {
    const std::size_t ru = find(idx(e.u));
    const std::size_t rv = find(idx(e.v));
    if (ru == rv) {
      throw TheoryViolation("distinct-sign edges " + to_string(edges[0]) + ", " +
                            to_string(edges[1]) + ", " + to_string(edges[2]) + ", " +
                            to_string(edges[3]) + " contain a circle");
    }
    parent[ru] = rv;
  }

  EdgeStructure out;
  out.edges = edges;
  Vertex center = 0;
  int max_degree = 0;
  for (Vertex v : verts) {
    int d = 0;
    for (Edge e : edges) d += e.touches(v) ? 1 : 0;
    if (d > max_degree) {
      max_degree = d;
      center = v;
    }
  }
  if (max_degree == 4) {
    out.kind = ForestCase::kCommonVertex;
    out.center = center;
  } else if (max_degree == 3) {
    out.center = center;
    const Edge* last = nullptr;
    for (const Edge& e : edges) {
      if (!e.touches(center)) last = &e;
    }
    bool attached = false;
    for (const Edge& e : edges) {
      if (&e != last && e.shares_vertex(*last)) attached = true;
    }
    out.kind = attached ? ForestCase::kStarWithAttached : ForestCase::kStarWithDisjoint;
  } else {
    out.kind = ForestCase::kLinearForest;
  }
  return out;
}

/// In a graph normalized at `hub`, the lexicographically first edge of
/// K_n minus the hub for each sign e, a, b, c (in that order), if all four
/// signs occur.
inline std::optional<std::array<Edge, 4>> choose_distinct_sign_edges(
    const SignedCompleteGraph& normalized, Vertex hub) {
  std::array<Edge, 4> out{};
  SignSet found;
  const int n = normalized.order();
  for (Vertex u = 1; u <= n && !found.is_full(); ++u) {
    if (u == hub) continue;
    for (Vertex v = u + 1; v <= n; ++v) {
      if (v == hub) continue;
      const F22 s = normalized.sign(u, v);
      if (found.contains(s)) continue;
      found.insert(s);
      out[s.bits()] = Edge(u, v);
    }
  }
  if (!found.is_full()) return std::nullopt;
  return out;
}

/// Normalizes at `hub`, picks one edge per sign and classifies them.
inline std::optional<EdgeStructure> distinct_sign_edge_structure(const SignedCompleteGraph& g,
                                                                 Vertex hub) {
  const SignedCompleteGraph normalized =
      is_normalized_at(g, hub) ? g : normalize_at(g, hub).graph;
  const auto edges = choose_distinct_sign_edges(normalized, hub);
  if (!edges) return std::nullopt;
  return distinct_sign_edge_structure(*edges);
}

}  // namespace dsign
