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

// Spectrum prediction from triangle diversity, and explicit construction
// of four Hamiltonian circles with pairwise distinct signs.
//
// The construction walks a fixed case tree. Each branch builds candidate
// circles from labeled vertices and insertion moves; the signs are always
// recomputed on the input graph, never taken from the branch's own sign
// bookkeeping. When no branch applies, a bounded neighborhood search over
// circles takes over, and its output is checked the same way.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dsign/census.hpp"
#include "dsign/graph.hpp"
#include "dsign/switching.hpp"

namespace dsign {

enum class PredictionKind { kSingleton, kParityPair, kFull, kDeferred };

inline const char* to_string(PredictionKind k) {
  switch (k) {
    case PredictionKind::kSingleton: return "singleton";
    case PredictionKind::kParityPair: return "parity-pair";
    case PredictionKind::kFull: return "full";
    case PredictionKind::kDeferred: return "deferred";
  }
  return "?";
}

/// An upper bound on the spectrum (exact for kFull).
struct SpectrumPrediction {
  PredictionKind kind = PredictionKind::kDeferred;
  /// Signs the spectrum may contain; the full group for kFull and kDeferred.
  SignSet allowed = SignSet::full();
  int diversity = 0;
  std::string provenance;

  bool admits(SignSet realized) const {
    if (kind == PredictionKind::kFull) return realized.is_full();
    return realized.subset_of(allowed);
  }
};

inline SpectrumPrediction predict_spectrum(const SignedCompleteGraph& g) {
  const int n = g.order();
  if (n < 3) throw Error("predict_spectrum needs n >= 3");
  const TriangleCensus census = triangle_census(g);
  SpectrumPrediction out;
  out.diversity = census.diversity();
  std::vector<F22> signs;
  for (F22 s : kAllElements) {
    if (census.signs().contains(s)) signs.push_back(s);
  }
  const bool odd_fan = (n - 2) % 2 == 1;
  if (out.diversity == 1) {
    out.kind = PredictionKind::kSingleton;
    out.allowed = SignSet{odd_fan ? signs[0] : kE};
    out.provenance = "single triangle sign; circle sign is (n-2) times it";
  } else if (out.diversity == 2) {
    out.kind = PredictionKind::kParityPair;
    out.allowed = odd_fan ? SignSet{signs[0], signs[1]} : SignSet{kE, signs[0] + signs[1]};
    out.provenance = odd_fan ? "two triangle signs, odd number of fan triangles"
                             : "two triangle signs, even number of fan triangles";
  } else if (n > 5) {
    out.kind = PredictionKind::kFull;
    out.provenance = "three or more triangle signs, n > 5";
  } else {
    out.kind = PredictionKind::kDeferred;
    out.provenance = "three or more triangle signs, n <= 5: left to enumeration";
  }
  return out;
}

struct Witness {
  Circle circle;
  F22 sign;
};

struct WitnessSet {
  std::vector<Witness> witnesses;
  /// Branch labels from the root of the case tree down.
  std::vector<std::string> trace;
  /// Set when some witness came out of a search rather than a fixed template.
  bool search_backed = false;

  std::string trace_string() const {
    std::string out;
    for (const auto& t : trace) {
      if (!out.empty()) out += " / ";
      out += t;
    }
    return out;
  }
};

struct WitnessCheck {
  bool ok = false;
  std::string message;
};

/// Independent re-verification: four Hamiltonian circles, recorded signs
/// equal recomputed signs, and the signs are pairwise distinct.
inline WitnessCheck verify_witnesses(const SignedCompleteGraph& g, const WitnessSet& ws) {
  if (ws.witnesses.size() != 4) {
    return {false, "expected 4 witnesses, got " + std::to_string(ws.witnesses.size())};
  }
  SignSet seen;
  for (const Witness& w : ws.witnesses) {
    const auto vs = w.circle.vertices();
    if (static_cast<int>(vs.size()) != g.order()) {
      return {false, "circle " + w.circle.to_string() + " is not Hamiltonian"};
    }
    for (Vertex v : vs) {
      if (!g.has_vertex(v)) return {false, "circle " + w.circle.to_string() + " leaves the graph"};
    }
    const F22 s = walk_sign(g, w.circle);
    if (s != w.sign) {
      return {false, "circle " + w.circle.to_string() + " has sign " + to_string(s) +
                         ", recorded " + to_string(w.sign)};
    }
    if (seen.contains(s)) return {false, "sign " + to_string(s) + " appears twice"};
    seen.insert(s);
  }
  return {true, "ok"};
}

enum class ConstructionStatus { kConstructed, kRefused, kUnsupported, kCounterexampleCandidate };

inline const char* to_string(ConstructionStatus s) {
  switch (s) {
    case ConstructionStatus::kConstructed: return "constructed";
    case ConstructionStatus::kRefused: return "refused";
    case ConstructionStatus::kUnsupported: return "unsupported";
    case ConstructionStatus::kCounterexampleCandidate: return "counterexample-candidate";
  }
  return "?";
}

struct ConstructionOutcome {
  ConstructionStatus status = ConstructionStatus::kUnsupported;
  SpectrumPrediction prediction;
  std::optional<WitnessSet> witnesses;
  std::string detail;
};

struct SolverOptions {
  bool allow_fallback = true;
  int fallback_depth = 3;
  std::size_t fallback_visit_cap = 200000;
};

namespace detail {

/// Keeps the first circle offered for each sign.
class WitnessPicker {
 public:
  explicit WitnessPicker(const SignedCompleteGraph& g) : g_(g) {}

  bool offer(const Circle& c) {
    const F22 s = walk_sign(g_, c);
    auto& slot = slots_[s.bits()];
    if (!slot) slot = c;
    return full();
  }

  bool full() const {
    return std::all_of(slots_.begin(), slots_.end(), [](const auto& s) { return s.has_value(); });
  }

  std::optional<WitnessSet> take(std::vector<std::string> trace, bool search_backed) const {
    if (!full()) return std::nullopt;
    WitnessSet ws;
    for (F22 s : kAllElements) ws.witnesses.push_back({*slots_[s.bits()], s});
    ws.trace = std::move(trace);
    ws.search_backed = search_backed;
    return ws;
  }

 private:
  const SignedCompleteGraph& g_;
  std::array<std::optional<Circle>, 4> slots_;
};

inline std::vector<Vertex> complement(int n, std::initializer_list<Vertex> used) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v) {
    if (std::find(used.begin(), used.end(), v) == used.end()) out.push_back(v);
  }
  return out;
}

inline std::vector<Vertex> complement(int n, std::span<const Vertex> used) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v) {
    if (std::find(used.begin(), used.end(), v) == used.end()) out.push_back(v);
  }
  return out;
}

inline std::vector<Vertex> concat(std::vector<Vertex> head, const std::vector<Vertex>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

// Consecutive-triple branch. Normalizes at the fourth triple vertex, labels
// the K4 on the hub and the first three triple vertices by the pattern of
// edges carrying the third triangle sign, and inserts that vertex into
// four edges of two fixed base circles.
inline std::optional<WitnessSet> consecutive_triple_branch(const SignedCompleteGraph& g, Vertex hub,
                                                           const ConsecutiveTriple& t) {
  const int n = g.order();
  const Vertex v5 = t[3];
  const SignedCompleteGraph gn = normalize_at(g, v5).graph;
  const std::array<Vertex, 4> k4{hub, t[0], t[1], t[2]};
  const F22 z = gn.sign(hub, t[2]);
  const std::vector<Vertex> tail = complement(n, {hub, t[0], t[1], t[2], t[3]});

  std::vector<Edge> z_edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (gn.sign(k4[i], k4[j]) == z) z_edges.emplace_back(k4[i], k4[j]);

  auto ledger = [&](const std::array<Vertex, 4>& v, WitnessPicker& picker) {
    // v = (v1, v2, v3, v4); H1 = v4 v1 v3 v2 tail, H2 = v4 v3 v1 v2 tail.
    const Circle h1(concat({v[3], v[0], v[2], v[1]}, tail));
    const Circle h2(concat({v[3], v[2], v[0], v[1]}, tail));
    picker.offer(insert_vertex(h1, 0, v5));
    picker.offer(insert_vertex(h2, 0, v5));
    picker.offer(insert_vertex(h2, 1, v5));
    return picker.offer(insert_vertex(h2, 2, v5));
  };

  std::optional<std::array<Vertex, 4>> labels;
  std::string panel = "unmatched panel";
  if (z_edges.size() == 3) {
    for (Vertex m : k4) {
      if (!std::all_of(z_edges.begin(), z_edges.end(), [m](Edge e) { return e.touches(m); })) {
        continue;
      }
      std::vector<Vertex> rest;
      for (Vertex v : k4) {
        if (v != m) rest.push_back(v);
      }
      std::sort(rest.begin(), rest.end());
      for (std::size_t i = 0; i < 3; ++i) {
        const Vertex c = rest[i];
        const Vertex p = rest[(i + 1) % 3];
        const Vertex q = rest[(i + 2) % 3];
        if (gn.sign(c, p) == gn.sign(c, q) && gn.sign(p, q) != gn.sign(c, p)) {
          labels = std::array<Vertex, 4>{std::min(p, q), std::max(p, q), c, m};
          panel = "left panel";
        }
      }
    }
  } else if (z_edges.size() == 4) {
    std::vector<Edge> others;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (gn.sign(k4[i], k4[j]) != z) others.emplace_back(k4[i], k4[j]);
    if (!others[0].shares_vertex(others[1])) {
      std::sort(others.begin(), others.end());
      labels = std::array<Vertex, 4>{others[0].u, others[0].v, others[1].u, others[1].v};
      panel = "right panel";
    }
  }

  if (labels) {
    WitnessPicker picker(g);
    if (ledger(*labels, picker)) return picker.take({"three signs", "consecutive triple", panel}, false);
  }
  std::array<Vertex, 4> perm = k4;
  std::sort(perm.begin(), perm.end());
  do {
    WitnessPicker picker(g);
    if (ledger(perm, picker)) {
      return picker.take({"three signs", "consecutive triple", panel, "relabel search"}, true);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Shared-edge branch: two hub triangles on a common hub edge with different
// signs and a disjoint hub triangle with the third sign.
inline std::optional<WitnessSet> shared_edge_branch(const SignedCompleteGraph& g, Vertex hub,
                                                    const SharedEdgeConfiguration& cfg) {
  const int n = g.order();
  for (const auto& [v5, v6] : {std::pair{cfg.d, cfg.f}, std::pair{cfg.f, cfg.d}}) {
    const SignedCompleteGraph gn = normalize_at(g, v5).graph;
    const Vertex v1 = hub, v2 = cfg.a, v3 = cfg.b, v4 = cfg.c;
    const F22 z = gn.sign(v1, v6);
    const std::array<Vertex, 4> k4{v1, v2, v3, v4};
    bool has_z_edge = false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) has_z_edge = has_z_edge || gn.sign(k4[i], k4[j]) == z;
    const std::string sub = has_z_edge ? "K4 meets third sign" : "K4 avoids third sign";
    const std::vector<Vertex> tail = complement(n, {v1, v2, v3, v4, v5, v6});
    const Circle h1(concat({v6, v1, v2, v4, v3}, tail));
    const Circle h2(concat({v6, v1, v4, v2, v3}, tail));

    WitnessPicker picker(g);
    picker.offer(insert_vertex(h1, 0, v5));
    picker.offer(insert_vertex(h1, 1, v5));
    picker.offer(insert_vertex(h1, 2, v5));
    if (picker.offer(insert_vertex(h2, 0, v5))) {
      return picker.take({"three signs", "shared edge", sub, "ledger"}, false);
    }
    for (std::size_t i = 0; i < h1.size(); ++i) picker.offer(insert_vertex(h1, i, v5));
    for (std::size_t i = 0; i < h2.size(); ++i) picker.offer(insert_vertex(h2, i, v5));
    if (picker.full()) return picker.take({"three signs", "shared edge", sub, "insertion search"}, true);
  }
  return std::nullopt;
}

// x-y-m covering the signs of m-a and m-b, using that the edge ab repeats
// one of them when {hub, m, a, b} is not all-distinct.
inline std::vector<Vertex> two_edge_path_to(const SignedCompleteGraph& gn, Vertex m, Vertex a,
                                            Vertex b) {
  const F22 t = gn.sign(a, b);
  if (t == gn.sign(m, a)) return {a, b, m};
  if (t == gn.sign(m, b)) return {b, a, m};
  throw TheoryViolation("edge " + to_string(Edge(a, b)) + " repeats neither star sign at " +
                        std::to_string(m));
}

inline Vertex other_end(Edge e, Vertex v) { return e.u == v ? e.v : e.u; }

}  // namespace detail

/// Turns a path of the hub-normalized graph that avoids the hub and carries
/// all four edge signs into four Hamiltonian circles: the path is closed
/// into a circle through the remaining non-hub vertices, and the hub is
/// inserted into one edge of each sign. Each insertion shifts the circle
/// sign by that edge's sign, as the hub edges are identity.
inline WitnessSet build_from_four_sign_path(const SignedCompleteGraph& normalized, const Path& p,
                                            Vertex hub) {
  if (!is_normalized_at(normalized, hub)) throw Error("graph is not normalized at the hub");
  detail::require_in_graph(normalized, p.vertices());
  const auto pv = p.vertices();
  if (std::find(pv.begin(), pv.end(), hub) != pv.end()) throw Error("path passes through the hub");
  std::array<std::optional<std::size_t>, 4> edge_at_sign;
  for (std::size_t i = 0; i + 1 < pv.size(); ++i) {
    auto& slot = edge_at_sign[normalized.sign(pv[i], pv[i + 1]).bits()];
    if (!slot) slot = i;
  }
  if (!std::all_of(edge_at_sign.begin(), edge_at_sign.end(), [](auto& s) { return s.has_value(); })) {
    throw Error("path " + p.to_string() + " does not carry four distinct edge signs");
  }
  std::vector<Vertex> used(pv.begin(), pv.end());
  used.push_back(hub);
  std::vector<Vertex> seq(pv.begin(), pv.end());
  for (Vertex v : detail::complement(normalized.order(), used)) seq.push_back(v);
  const Circle base(seq);
  WitnessSet ws;
  for (F22 s : kAllElements) {
    const Circle c = insert_vertex(base, *edge_at_sign[s.bits()], hub);
    ws.witnesses.push_back({c, walk_sign(normalized, c)});
  }
  SignSet got;
  for (const auto& w : ws.witnesses) got.insert(w.sign);
  if (!got.is_full()) throw TheoryViolation("hub insertions did not separate the four signs");
  ws.trace = {"hub insertion"};
  return ws;
}

/// A path through one edge of each sign in a hub-normalized graph with four
/// triangle signs and no all-distinct K4.
inline Path four_sign_path(const SignedCompleteGraph& normalized, const EdgeStructure& s) {
  using detail::other_end;
  const auto& e = s.edges;
  std::vector<Vertex> seq;
  switch (s.kind) {
    case ForestCase::kCommonVertex: {
      const Vertex m = s.center;
      const auto first = detail::two_edge_path_to(normalized, m, other_end(e[0], m), other_end(e[1], m));
      const auto second = detail::two_edge_path_to(normalized, m, other_end(e[2], m), other_end(e[3], m));
      seq = first;
      seq.push_back(second[1]);
      seq.push_back(second[0]);
      break;
    }
    case ForestCase::kStarWithAttached:
    case ForestCase::kStarWithDisjoint: {
      const Vertex m = s.center;
      std::vector<Vertex> leaves;
      Edge last;
      for (Edge x : e) {
        if (x.touches(m)) {
          leaves.push_back(other_end(x, m));
        } else {
          last = x;
        }
      }
      // The leaf carrying the extra edge (if any) goes last on the star.
      auto pivot = std::find_if(leaves.begin(), leaves.end(), [&](Vertex v) { return last.touches(v); });
      if (pivot == leaves.end()) pivot = leaves.end() - 1;
      std::rotate(pivot, pivot + 1, leaves.end());
      seq = detail::two_edge_path_to(normalized, m, leaves[0], leaves[1]);
      seq.push_back(leaves[2]);
      if (last.touches(leaves[2])) {
        seq.push_back(other_end(last, leaves[2]));
      } else {
        seq.push_back(last.u);
        seq.push_back(last.v);
      }
      break;
    }
    case ForestCase::kLinearForest: {
      // Walk each path component from an end vertex; join components in
      // order of their smallest vertex.
      std::vector<Edge> pending(e.begin(), e.end());
      std::vector<std::vector<Vertex>> comps;
      while (!pending.empty()) {
        auto degree = [&](Vertex v) {
          return std::count_if(pending.begin(), pending.end(), [v](Edge x) { return x.touches(v); });
        };
        Vertex start = 0;
        for (Edge x : pending) {
          for (Vertex v : {x.u, x.v}) {
            if (degree(v) == 1 && (start == 0 || v < start)) start = v;
          }
        }
        std::vector<Vertex> comp{start};
        for (bool grown = true; grown;) {
          grown = false;
          for (auto it = pending.begin(); it != pending.end(); ++it) {
            if (it->touches(comp.back())) {
              comp.push_back(other_end(*it, comp.back()));
              pending.erase(it);
              grown = true;
              break;
            }
          }
        }
        comps.push_back(std::move(comp));
      }
      std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
        return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
      });
      for (const auto& c : comps) seq.insert(seq.end(), c.begin(), c.end());
      break;
    }
  }
  return Path(std::move(seq));
}

/// Four Hamiltonian circles through the K5 on `k4` plus `v5`: six K4 paths
/// from one K4 vertex, extended to v5 and closed through the other vertices.
/// Succeeds when some K4 vertex starts paths of all four signs after
/// normalizing at v5.
inline std::optional<WitnessSet> necklace_construct(const SignedCompleteGraph& g,
                                                    const std::array<Vertex, 4>& k4, Vertex v5) {
  const int n = g.order();
  const SignedCompleteGraph gn = normalize_at(g, v5).graph;
  std::vector<Vertex> used(k4.begin(), k4.end());
  used.push_back(v5);
  const std::vector<Vertex> outside = detail::complement(n, used);
  std::array<Vertex, 4> sorted = k4;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v1 : sorted) {
    std::vector<Vertex> rest;
    for (Vertex v : sorted) {
      if (v != v1) rest.push_back(v);
    }
    SignSet path_signs;
    do {
      path_signs.insert(gn.sign(v1, rest[0]) + gn.sign(rest[0], rest[1]) + gn.sign(rest[1], rest[2]));
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (!path_signs.is_full()) continue;
    detail::WitnessPicker picker(g);
    do {
      picker.offer(Circle(detail::concat({v1, rest[0], rest[1], rest[2], v5}, outside)));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return picker.take({"all-distinct K4", "necklace"}, false);
  }
  return std::nullopt;
}

namespace detail {

inline std::optional<WitnessSet> all_distinct_k4_branch(const SignedCompleteGraph& g,
                                                        const std::array<Vertex, 4>& k4) {
  const int n = g.order();
  const std::vector<Vertex> outside = complement(n, std::span<const Vertex>(k4));

  for (Vertex u : outside) {
    const SignedCompleteGraph gn = normalize_at(g, u).graph;
    if (classify_k4(gn, k4).triple) continue;
    if (auto ws = necklace_construct(g, k4, u)) return ws;
  }

  const Vertex v5 = outside[0];
  const SignedCompleteGraph gn = normalize_at(g, v5).graph;
  for (std::size_t oi = 1; oi < outside.size(); ++oi) {
    const Vertex v6 = outside[oi];
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (gn.sign(k4[i], v6) == gn.sign(k4[j], v6)) continue;
        std::vector<Vertex> tail;
        for (Vertex v : outside) {
          if (v != v5 && v != v6) tail.push_back(v);
        }
        WitnessPicker picker(g);
        for (Vertex start : {k4[i], k4[j]}) {
          std::vector<Vertex> rest;
          for (Vertex v : k4) {
            if (v != start) rest.push_back(v);
          }
          std::sort(rest.begin(), rest.end());
          do {
            picker.offer(Circle(concat({v6, start, rest[0], rest[1], rest[2], v5}, tail)));
          } while (std::next_permutation(rest.begin(), rest.end()));
        }
        if (picker.full()) return picker.take({"all-distinct K4", "two anchors"}, false);
        i = j = 4;
      }
    }
  }

  if (n == 6) {
    const Vertex v6 = outside[1];
    WitnessPicker picker(g);
    for (Vertex b : k4) {
      for (Vertex a : k4) {
        for (Vertex c : k4) {
          if (a == b || c == b || c <= a) continue;
          Vertex d = 0;
          for (Vertex v : k4) {
            if (v != a && v != b && v != c) d = v;
          }
          picker.offer(Circle({v6, a, b, c, v5, d}));
        }
      }
    }
    if (picker.full()) return picker.take({"all-distinct K4", "uniform outside", "n = 6"}, false);
  } else {
    const Vertex v6 = outside[1];
    const Vertex v7 = outside[2];
    const std::vector<Vertex> tail(outside.begin() + 3, outside.end());
    WitnessPicker picker(g);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        std::vector<Vertex> cd;
        for (int k = 0; k < 4; ++k) {
          if (k != i && k != j) cd.push_back(k4[k]);
        }
        std::vector<Vertex> seq{k4[i], k4[j], v6, cd[0], v7, cd[1]};
        seq = concat(std::move(seq), tail);
        seq.push_back(v5);
        picker.offer(Circle(seq));
      }
    }
    if (picker.full()) return picker.take({"all-distinct K4", "uniform outside", "n > 6"}, false);
  }
  return std::nullopt;
}

/// Breadth-first search over circles reachable from the seeds by vertex
/// relocation and 2-opt reversal.
inline std::optional<WitnessSet> fallback_search(const SignedCompleteGraph& g,
                                                 const std::vector<Circle>& seeds,
                                                 const SolverOptions& opt) {
  const int n = g.order();
  WitnessPicker picker(g);
  std::set<std::vector<Vertex>> visited;
  std::deque<std::pair<std::vector<Vertex>, int>> queue;
  auto push = [&](const Circle& c, int depth) {
    const Circle canon = c.canonical();
    std::vector<Vertex> key(canon.vertices().begin(), canon.vertices().end());
    if (!visited.insert(key).second) return;
    picker.offer(canon);
    queue.emplace_back(std::move(key), depth);
  };
  for (const Circle& s : seeds) push(s, 0);
  while (!queue.empty() && !picker.full() && visited.size() < opt.fallback_visit_cap) {
    auto [seq, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth >= opt.fallback_depth) continue;
    const std::size_t k = seq.size();
    for (std::size_t i = 0; i < k && !picker.full(); ++i) {
      std::vector<Vertex> without = seq;
      const Vertex v = without[i];
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
      for (std::size_t j = 0; j < without.size(); ++j) {
        std::vector<Vertex> moved = without;
        moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(j) + 1, v);
        push(Circle(std::move(moved)), depth + 1);
      }
    }
    for (std::size_t i = 1; i < k && !picker.full(); ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        std::vector<Vertex> flipped = seq;
        std::reverse(flipped.begin() + static_cast<std::ptrdiff_t>(i),
                     flipped.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        push(Circle(std::move(flipped)), depth + 1);
      }
    }
  }
  (void)n;
  return picker.take({"fallback search"}, true);
}

}  // namespace detail

/// Runs the case tree. Refuses diversity <= 2 (with the prediction) and
/// n <= 5; returns a counterexample candidate if even the fallback search
/// fails.
inline ConstructionOutcome construct_witnesses(const SignedCompleteGraph& g,
                                               const SolverOptions& opt = {}) {
  ConstructionOutcome out;
  const int n = g.order();
  if (n <= 5) {
    out.status = ConstructionStatus::kUnsupported;
    out.prediction = n >= 3 ? predict_spectrum(g) : SpectrumPrediction{};
    out.detail = "construction needs n > 5, got n = " + std::to_string(n);
    return out;
  }
  out.prediction = predict_spectrum(g);
  const int diversity = out.prediction.diversity;
  if (diversity <= 2) {
    out.status = ConstructionStatus::kRefused;
    out.detail = "triangle diversity " + std::to_string(diversity) + " bounds the spectrum by " +
                 out.prediction.allowed.to_string();
    return out;
  }

  std::optional<WitnessSet> ws;
  std::vector<std::string> notes;
  try {
    if (diversity == 3) {
      for (Vertex hub = 1; hub <= n && !ws; ++hub) {
        if (auto t = find_consecutive_distinct_triple(g, hub)) {
          ws = detail::consecutive_triple_branch(g, hub, *t);
        } else if (auto cfg = find_shared_edge_configuration(g, hub)) {
          ws = detail::shared_edge_branch(g, hub, *cfg);
        }
      }
    } else if (auto k4 = find_sigma4_star(g)) {
      ws = detail::all_distinct_k4_branch(g, *k4);
    } else {
      for (Vertex hub = 1; hub <= n && !ws; ++hub) {
        const SignedCompleteGraph gn = normalize_at(g, hub).graph;
        const auto edges = choose_distinct_sign_edges(gn, hub);
        if (!edges) continue;
        const EdgeStructure s = distinct_sign_edge_structure(*edges);
        ws = build_from_four_sign_path(gn, four_sign_path(gn, s), hub);
        ws->trace.insert(ws->trace.begin(), {"four signs, no all-distinct K4", to_string(s.kind)});
        // Recompute on the input graph; the normalized signs agree by switching invariance.
        for (auto& w : ws->witnesses) w.sign = walk_sign(g, w.circle);
      }
    }
  } catch (const TheoryViolation& e) {
    notes.push_back(std::string("case tree: ") + e.what());
    ws.reset();
  }

  if (!ws && opt.allow_fallback) {
    std::vector<Vertex> identity(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i + 1;
    ws = detail::fallback_search(g, {Circle(identity)}, opt);
  }
  if (!ws) {
    out.status = ConstructionStatus::kCounterexampleCandidate;
    out.detail = "no branch or search produced four distinct signs";
    for (const auto& note : notes) out.detail += "; " + note;
    return out;
  }
  const WitnessCheck check = verify_witnesses(g, *ws);
  if (!check.ok) {
    out.status = ConstructionStatus::kCounterexampleCandidate;
    out.detail = "witness check failed: " + check.message;
    return out;
  }
  out.status = ConstructionStatus::kConstructed;
  out.witnesses = std::move(ws);
  for (const auto& note : notes) out.detail += note;
  return out;
}

}  // namespace dsign
