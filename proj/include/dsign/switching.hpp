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

#pragma once

#include <utility>
#include <vector>

#include "dsign/graph.hpp"

namespace dsign {

/// A vertex function zeta: V -> F2^2.
class SwitchingFunction {
 public:
  explicit SwitchingFunction(std::vector<F22> values) : values_(std::move(values)) {}

  static SwitchingFunction identity(int n) {
    return SwitchingFunction(std::vector<F22>(static_cast<std::size_t>(n)));
  }

  int order() const { return static_cast<int>(values_.size()); }
  F22 operator()(Vertex v) const { return values_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<F22>& values() const { return values_; }

  bool is_identity() const {
    for (F22 x : values_) {
      if (!x.is_identity()) return false;
    }
    return true;
  }

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;

 private:
  std::vector<F22> values_;
};

/// sigma'(u, v) = zeta(u) + sigma(u, v) + zeta(v). Closed walks keep their sign.
inline SignedCompleteGraph apply_switching(const SignedCompleteGraph& g,
                                           const SwitchingFunction& zeta) {
  if (zeta.order() != g.order()) {
    throw Error("switching function covers " + std::to_string(zeta.order()) +
                " vertices, graph has " + std::to_string(g.order()));
  }
  const int n = g.order();
  std::vector<F22> signs;
  signs.reserve(g.edge_count());
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) signs.push_back(zeta(u) + g.sign(u, v) + zeta(v));
  }
  return SignedCompleteGraph(n, std::move(signs));
}

struct Normalization {
  SignedCompleteGraph graph;
  SwitchingFunction switching;
};

/// Switches with zeta(u) = sigma(u, v), zeta(v) = e, so every edge at v
/// becomes e and sigma'(u, w) equals the old triangle sign of {u, w, v}.
inline Normalization normalize_at(const SignedCompleteGraph& g, Vertex v) {
  if (!g.has_vertex(v)) throw Error("cannot normalize at unknown vertex " + std::to_string(v));
  std::vector<F22> zeta(static_cast<std::size_t>(g.order()));
  for (Vertex u = 1; u <= g.order(); ++u) {
    if (u != v) zeta[static_cast<std::size_t>(u - 1)] = g.sign(u, v);
  }
  SwitchingFunction z(std::move(zeta));
  return {apply_switching(g, z), std::move(z)};
}

inline bool is_normalized_at(const SignedCompleteGraph& g, Vertex v) {
  for (Vertex u = 1; u <= g.order(); ++u) {
    if (u != v && !g.sign(u, v).is_identity()) return false;
  }
  return true;
}

}  // namespace dsign
