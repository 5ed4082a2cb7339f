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

// The hub triangle basis of the binary cycle space Z2(K_n).

#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "dsign/graph.hpp"

namespace dsign {

struct BasisTriangle {
  Triangle triangle;
  F22 sign;
};

/// All triangles through `hub`, ordered by their other two vertices.
struct TriangleBasis {
  Vertex hub = 0;
  std::vector<BasisTriangle> triangles;

  SignSet signs() const {
    SignSet s;
    for (const auto& t : triangles) s.insert(t.sign);
    return s;
  }
};

inline TriangleBasis basis(const SignedCompleteGraph& g, Vertex hub) {
  if (!g.has_vertex(hub)) throw Error("invalid hub " + std::to_string(hub));
  if (g.order() < 3) throw Error("a triangle basis needs at least 3 vertices");
  TriangleBasis out{hub, {}};
  const int n = g.order();
  out.triangles.reserve(static_cast<std::size_t>((n - 1) * (n - 2) / 2));
  for (Vertex i = 1; i <= n; ++i) {
    if (i == hub) continue;
    for (Vertex j = i + 1; j <= n; ++j) {
      if (j == hub) continue;
      out.triangles.push_back({Triangle(hub, i, j), triangle_sign(g, hub, i, j)});
    }
  }
  return out;
}

/// Splits a Hamiltonian circle into the n - 2 fan triangles
/// T(hub, w_i, w_{i+1}) along the circle read from the hub. Their signs sum
/// to the circle's sign.
inline std::vector<Triangle> decompose_hamiltonian(const SignedCompleteGraph& g, const Circle& h,
                                                   Vertex hub) {
  detail::require_in_graph(g, h.vertices());
  if (static_cast<int>(h.size()) != g.order()) {
    throw Error("circle is not Hamiltonian: it visits " + std::to_string(h.size()) + " of " +
                std::to_string(g.order()) + " vertices");
  }
  const auto vs = h.vertices();
  const auto it = std::find(vs.begin(), vs.end(), hub);
  if (it == vs.end()) throw Error("hub " + std::to_string(hub) + " is not on the circle");
  const std::size_t start = static_cast<std::size_t>(it - vs.begin());
  const std::size_t k = vs.size();
  std::vector<Triangle> out;
  out.reserve(k - 2);
  for (std::size_t i = 1; i + 1 < k; ++i) {
    out.emplace_back(hub, vs[(start + i) % k], vs[(start + i + 1) % k]);
  }
  return out;
}

/// A set of edges of K_n, kept sorted and duplicate free.
using EdgeSet = std::vector<Edge>;

inline EdgeSet make_edge_set(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

inline EdgeSet edge_set(const Circle& c) { return make_edge_set(c.edges()); }

inline EdgeSet symmetric_difference(const EdgeSet& x, const EdgeSet& y) {
  EdgeSet out;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

/// True iff every vertex has even degree, i.e. the edges lie in Z2(K_n).
inline bool is_even_subgraph(std::span<const Edge> edges) {
  std::vector<Vertex> ends;
  ends.reserve(edges.size() * 2);
  for (Edge e : edges) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  for (std::size_t i = 0; i < ends.size();) {
    std::size_t j = i;
    while (j < ends.size() && ends[j] == ends[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

/// An edge set known to be a member of Z2(K_n).
class EvenSubgraph {
 public:
  explicit EvenSubgraph(EdgeSet edges) : edges_(make_edge_set(std::move(edges))) {
    if (!is_even_subgraph(edges_)) throw Error("edge set has a vertex of odd degree");
  }

  const EdgeSet& edges() const { return edges_; }

  friend EvenSubgraph operator+(const EvenSubgraph& x, const EvenSubgraph& y) {
    return EvenSubgraph(symmetric_difference(x.edges_, y.edges_));
  }

 private:
  EdgeSet edges_;
};

}  // namespace dsign
