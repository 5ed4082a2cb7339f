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

// Machine checks of the structural claims about doubly signed complete
// graphs, each under a stable identifier, over exhaustive or seeded random
// domains.
//
// Checks are re-derived from edge signs, switching and circle enumeration.
// Nothing here calls into the witness construction.

#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "dsign/generate.hpp"
#include "dsign/graph.hpp"
#include "dsign/oracle.hpp"
#include "dsign/switching.hpp"

namespace dsign::lab {

// ---------------------------------------------------------------------------
// Scopes

enum class ScopeKind { kExhaustiveK4, kExhaustiveGroup, kExhaustiveNormalized, kRandom };

struct Scope {
  ScopeKind kind = ScopeKind::kExhaustiveK4;
  int n = 4;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  static Scope exhaustive_k4() { return {ScopeKind::kExhaustiveK4, 4, 4096, 0}; }
  static Scope exhaustive_group() { return {ScopeKind::kExhaustiveGroup, 0, 256, 0}; }
  static Scope exhaustive_normalized(int n) { return {ScopeKind::kExhaustiveNormalized, n, 0, 0}; }
  static Scope random(int n, std::uint64_t count, std::uint64_t seed) {
    return {ScopeKind::kRandom, n, count, seed};
  }

  bool is_exhaustive() const { return kind != ScopeKind::kRandom; }

  std::string to_string() const {
    switch (kind) {
      case ScopeKind::kExhaustiveK4: return "exhaustive_k4";
      case ScopeKind::kExhaustiveGroup: return "exhaustive_group";
      case ScopeKind::kExhaustiveNormalized: return "exhaustive_normalized(" + std::to_string(n) + ")";
      case ScopeKind::kRandom:
        return "random(" + std::to_string(n) + "," + std::to_string(count) + "," + std::to_string(seed) + ")";
    }
    return "?";
  }
};

/// "exhaustive_k4", "exhaustive_group", "exhaustive_normalized(N)" or
/// "random(N,COUNT,SEED)".
inline Scope parse_scope(std::string_view text) {
  if (text == "exhaustive_k4") return Scope::exhaustive_k4();
  if (text == "exhaustive_group") return Scope::exhaustive_group();
  auto args = [&](std::string_view prefix) -> std::optional<std::vector<std::uint64_t>> {
    if (!text.starts_with(prefix) || !text.ends_with(")")) return std::nullopt;
    std::string_view body = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    std::vector<std::uint64_t> out;
    while (true) {
      const auto comma = body.find(',');
      const std::string_view tok = body.substr(0, comma);
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) return std::nullopt;
      out.push_back(v);
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    return out;
  };
  if (auto a = args("exhaustive_normalized("); a && a->size() == 1) {
    return Scope::exhaustive_normalized(static_cast<int>((*a)[0]));
  }
  if (auto a = args("random("); a && (a->size() == 2 || a->size() == 3)) {
    return Scope::random(static_cast<int>((*a)[0]), (*a)[1], a->size() == 3 ? (*a)[2] : 0);
  }
  throw Error("unknown scope \"" + std::string(text) +
              "\" (expected exhaustive_k4, exhaustive_group, exhaustive_normalized(N) or "
              "random(N,COUNT[,SEED]))");
}

// ---------------------------------------------------------------------------
// Reports

inline constexpr std::size_t kViolationListCap = 20;

struct Violation {
  std::uint64_t index = 0;
  std::string message;
};

/// Per-worker accumulator, merged in index order.
struct Tally {
  std::uint64_t scanned = 0;
  std::uint64_t qualifying = 0;
  std::map<std::string, std::uint64_t> stats;
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;

  void violate(std::uint64_t index, std::string message) {
    ++violation_count;
    if (violations.size() < kViolationListCap) violations.push_back({index, std::move(message)});
  }

  void merge(Tally&& other) {
    scanned += other.scanned;
    qualifying += other.qualifying;
    for (const auto& [k, v] : other.stats) stats[k] += v;
    violation_count += other.violation_count;
    for (auto& v : other.violations) {
      if (violations.size() < kViolationListCap) violations.push_back(std::move(v));
    }
  }
};

struct VerificationReport {
  std::string id;
  std::string claim;
  std::string scope;
  std::string domain;
  std::uint64_t domain_size = 0;
  std::uint64_t scanned = 0;
  std::uint64_t qualifying = 0;
  std::map<std::string, std::uint64_t> stats;
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
  double elapsed_seconds = 0;
  std::optional<std::uint64_t> seed;
  int jobs = 1;

  bool pass() const { return violation_count == 0 && scanned == domain_size; }
};

// ---------------------------------------------------------------------------
// K4 facts from six edge signs, ordered 12, 13, 14, 23, 24, 34.

using K4Signs = std::array<F22, 6>;

constexpr int k4_slot(int i, int j) {
  // i < j, both in 0..3.
  return i == 0 ? j - 1 : (i == 1 ? j + 1 : 5);
}

struct K4Facts {
  K4Signs edges{};
  /// T123, T124, T134, T234 (1-based labels).
  std::array<F22, 4> triangles{};
  /// Directed Hamiltonian path signs from each start vertex.
  std::array<SignCounts, 4> per_start;
  /// Undirected path signs.
  SignCounts totals;
  /// Undirected paths grouped by endpoint pair: {12|34}, {14|23}, {13|24}.
  std::array<SignCounts, 3> groups;

  bool all_distinct() const {
    return SignSet{triangles[0], triangles[1], triangles[2], triangles[3]}.is_full();
  }
  F22 edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges[static_cast<std::size_t>(k4_slot(i, j))];
  }
};

inline int endpoint_group(int x, int y) {
  const int lo = std::min(x, y), hi = std::max(x, y);
  if ((lo == 0 && hi == 1) || (lo == 2 && hi == 3)) return 0;
  if ((lo == 0 && hi == 3) || (lo == 1 && hi == 2)) return 1;
  return 2;
}

inline K4Facts k4_facts(const K4Signs& s) {
  K4Facts f;
  f.edges = s;
  f.triangles = {s[0] + s[1] + s[3], s[0] + s[2] + s[4], s[1] + s[2] + s[5], s[3] + s[4] + s[5]};
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    const F22 sign = f.edge(p[0], p[1]) + f.edge(p[1], p[2]) + f.edge(p[2], p[3]);
    f.per_start[static_cast<std::size_t>(p[0])].add(sign);
    if (p[0] < p[3]) {
      f.totals.add(sign);
      f.groups[static_cast<std::size_t>(endpoint_group(p[0], p[3]))].add(sign);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return f;
}

inline K4Signs k4_signs(const SignedCompleteGraph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  return {g.sign(a, b), g.sign(a, c), g.sign(a, d), g.sign(b, c), g.sign(b, d), g.sign(c, d)};
}

/// Relabels so that new vertex i is old vertex perm[i] (0-based).
inline K4Signs permute(const K4Signs& s, const std::array<int, 4>& perm) {
  K4Facts f;
  f.edges = s;
  K4Signs out{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out[static_cast<std::size_t>(k4_slot(i, j))] = f.edge(perm[i], perm[j]);
  return out;
}

/// Exactly three edges of sign g that share a vertex or form a triangle.
inline bool has_common_sign_triple(const K4Signs& s, F22 g) {
  std::array<int, 4> degree{};
  int count = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (s[static_cast<std::size_t>(k4_slot(i, j))] == g) {
        ++count;
        ++degree[static_cast<std::size_t>(i)];
        ++degree[static_cast<std::size_t>(j)];
      }
  if (count != 3) return false;
  const bool star = std::find(degree.begin(), degree.end(), 3) != degree.end();
  const bool triangle = std::count(degree.begin(), degree.end(), 2) == 3;
  return star || triangle;
}

// ---------------------------------------------------------------------------
// Checks

struct Context {
  int n = 0;
  std::shared_ptr<const CircleTable> table;  // null when n is too large to tabulate

  SignSet spectrum(const SignedCompleteGraph& g) const {
    return table ? table->realized(g) : hamiltonian_spectrum(g).realized();
  }
};

using GraphCheck =
    std::function<void(const SignedCompleteGraph&, std::uint64_t, const Context&, Tally&)>;
using GroupCheck = std::function<void(F22, F22, F22, F22, std::uint64_t, Tally&)>;

struct LemmaSpec {
  std::string id;
  std::string claim;
  GraphCheck graph_check;  // set for graph-domain lemmas
  GroupCheck group_check;  // set for group-domain lemmas
  bool needs_spectrum = false;
};

namespace detail {

inline SignSet triangle_signs(const SignedCompleteGraph& g) {
  SignSet s;
  const int n = g.order();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      for (Vertex k = j + 1; k <= n; ++k) s.insert(g.sign(i, j) + g.sign(i, k) + g.sign(j, k));
  return s;
}

inline std::vector<F22> elements(SignSet s) {
  std::vector<F22> out;
  for (F22 x : kAllElements) {
    if (s.contains(x)) out.push_back(x);
  }
  return out;
}

inline std::string k4_name(Vertex a, Vertex b, Vertex c, Vertex d) {
  return "K4{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d) + "}";
}

/// Calls f(name, facts) for every induced K4.
template <typename F>
void for_each_k4(const SignedCompleteGraph& g, F&& f) {
  const int n = g.order();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c)
        for (Vertex d = c + 1; d <= n; ++d) f(k4_name(a, b, c, d), k4_signs(g, a, b, c, d));
}

/// Spectrum bound from the fan decomposition: n - 2 triangles, each of
/// sign x or y, so the circle sign is a sum with the parity of n - 2.
inline SignSet parity_bound(int n, F22 x, F22 y) {
  if ((n - 2) % 2 == 1) return SignSet{x, y};
  return SignSet{kE, x + y};
}

// Helper for K4-level lemmas applied to every all-distinct induced K4.
template <typename F>
GraphCheck per_sigma4(F check) {
  return [check](const SignedCompleteGraph& g, std::uint64_t index, const Context&, Tally& t) {
    bool any = false;
    for_each_k4(g, [&](const std::string& name, const K4Signs& s) {
      const K4Facts f = k4_facts(s);
      if (!f.all_distinct()) return;
      any = true;
      ++t.stats["all_distinct_k4s"];
      if (auto bad = check(f, t)) t.violate(index, name + ": " + *bad);
    });
    if (any) ++t.qualifying;
  };
}

inline std::string counts_string(const SignCounts& c) { return c.to_string(); }

inline bool shape_is(const SignCounts& c, std::array<std::uint64_t, 4> want) { return c.shape() == want; }

}  // namespace detail

inline const std::vector<LemmaSpec>& registry() {
  using namespace detail;
  static const std::vector<LemmaSpec> specs = [] {
    std::vector<LemmaSpec> v;

    v.push_back({"lemma1", "at most three triangle signs => every K4 has at most two",
                 [](const SignedCompleteGraph& g, std::uint64_t index, const Context&, Tally& t) {
                   if (triangle_signs(g).size() > 3) return;
                   ++t.qualifying;
                   for_each_k4(g, [&](const std::string& name, const K4Signs& s) {
                     const K4Facts f = k4_facts(s);
                     const int d = SignSet{f.triangles[0], f.triangles[1], f.triangles[2], f.triangles[3]}.size();
                     if (d > 2) t.violate(index, name + " has " + std::to_string(d) + " triangle signs");
                   });
                 },
                 {}});

    v.push_back({"lemma5", "exactly three triangle signs => every hub basis realizes all three",
                 [](const SignedCompleteGraph& g, std::uint64_t index, const Context&, Tally& t) {
                   const SignSet all = triangle_signs(g);
                   if (all.size() != 3) return;
                   ++t.qualifying;
                   const int n = g.order();
                   for (Vertex h = 1; h <= n; ++h) {
                     SignSet b;
                     for (Vertex i = 1; i <= n; ++i)
                       for (Vertex j = i + 1; j <= n; ++j)
                         if (i != h && j != h) b.insert(g.sign(h, i) + g.sign(h, j) + g.sign(i, j));
                     if (b != all) {
                       t.violate(index, "hub " + std::to_string(h) + " basis signs " + b.to_string() +
                                            " vs " + all.to_string());
                     }
                   }
                 },
                 {}});

    v.push_back({"lemma22", "exactly two triangle signs {x,y} => spectrum within the parity bound, not full",
                 [](const SignedCompleteGraph& g, std::uint64_t index, const Context& ctx, Tally& t) {
                   const SignSet ts = triangle_signs(g);
                   if (ts.size() != 2) return;
                   ++t.qualifying;
                   const auto xy = elements(ts);
                   const SignSet bound = parity_bound(g.order(), xy[0], xy[1]);
                   const SignSet spec = ctx.spectrum(g);
                   if (!spec.subset_of(bound) || spec.is_full()) {
                     t.violate(index, "spectrum " + spec.to_string() + " escapes " + bound.to_string());
                   }
                 },
                 {}, true});

    v.push_back({"remark1", "one triangle sign x => every circle has sign ((n-2) mod 2) x",
                 [](const SignedCompleteGraph& g, std::uint64_t index, const Context& ctx, Tally& t) {
                   const SignSet ts = triangle_signs(g);
                   if (ts.size() != 1) return;
                   ++t.qualifying;
                   const F22 x = elements(ts)[0];
                   const SignSet want{(g.order() - 2) % 2 == 1 ? x : kE};
                   const SignSet spec = ctx.spectrum(g);
                   if (spec != want) t.violate(index, "spectrum " + spec.to_string() + ", expected " + want.to_string());
                 },
                 {}, true});

    v.push_back({"proposition_norm",
                 "after normalizing at v, each edge ij away from v carries the sign of triangle ijv",
                 [](const SignedCompleteGraph& g, std::uint64_t index, const Context&, Tally& t) {
                   ++t.qualifying;
                   const int n = g.order();
                   const SignSet ts = triangle_signs(g);
                   for (Vertex v = 1; v <= n; ++v) {
                     const SignedCompleteGraph h = normalize_at(g, v).graph;
                     for (Vertex i = 1; i <= n; ++i) {
                       if (i == v) continue;
                       if (!h.sign(i, v).is_identity()) t.violate(index, "edge at hub not identity");
                       for (Vertex j = i + 1; j <= n; ++j) {
                         if (j == v) continue;
                         const F22 tri = g.sign(i, j) + g.sign(i, v) + g.sign(j, v);
                         if (h.sign(i, j) != tri) {
                           t.violate(index, "edge " + to_string(Edge(i, j)) + " after normalizing at " +
                                                std::to_string(v));
                         }
                         if (!ts.contains(h.sign(i, j))) t.violate(index, "edge sign outside the triangle signs");
                       }
                     }
                   }
                 },
                 {}});

    v.push_back({"lemma11", "exactly one of y1, y2 among z1, z2 => {yi + zj} is the whole group", {},
                 [](F22 y1, F22 y2, F22 z1, F22 z2, std::uint64_t index, Tally& t) {
                   const SignSet zs{z1, z2};
                   if ((zs.contains(y1) ? 1 : 0) + (zs.contains(y2) ? 1 : 0) != 1) return;
                   ++t.qualifying;
                   const SignSet sums{y1 + z1, y1 + z2, y2 + z1, y2 + z2};
                   if (!sums.is_full()) t.violate(index, "sums " + sums.to_string());
                 }});

    v.push_back({"lemma12", "{z1,z2} equal to {y1,y2} or its complement => {yi + zj} is {x,x,y,y}", {},
                 [](F22 y1, F22 y2, F22 z1, F22 z2, std::uint64_t index, Tally& t) {
                   const SignSet zs{z1, z2};
                   if (zs != SignSet{y1, y2} && zs != SignSet{kE, y1 + y2}) return;
                   ++t.qualifying;
                   SignCounts c;
                   for (F22 s : {y1 + z1, y1 + z2, y2 + z1, y2 + z2}) c.add(s);
                   if (!shape_is(c, {2, 2, 0, 0})) t.violate(index, "multiset " + c.to_string());
                 }});

    v.push_back({"lemma14", "a K4 without four distinct triangle signs has signs x,x,y,y",
                 [](const SignedCompleteGraph& g, std::uint64_t index, const Context&, Tally& t) {
                   bool any = false;
                   for_each_k4(g, [&](const std::string& name, const K4Signs& s) {
                     const K4Facts f = k4_facts(s);
                     if (f.all_distinct()) return;
                     any = true;
                     auto tri = f.triangles;
                     std::sort(tri.begin(), tri.end());
                     if (tri[0] != tri[1] || tri[2] != tri[3]) t.violate(index, name + " triangle signs do not pair");
                   });
                   if (any) ++t.qualifying;
                 },
                 {}});

    v.push_back({"key_lemma", "in an all-distinct K4, each sign labels an even number of Hamiltonian paths",
                 per_sigma4([](const K4Facts& f, Tally&) -> std::optional<std::string> {
                   for (F22 s : kAllElements) {
                     if (f.totals.count(s) % 2 != 0) return "path counts " + counts_string(f.totals);
                   }
                   return std::nullopt;
                 }),
                 {}});

    v.push_back({"table1",
                 "per disjoint edge pair: agreeing pair sums give four distinct group signs, others s,s,t,t; "
                 "rows follow the fixed pattern",
                 per_sigma4([](const K4Facts& raw, Tally& t) -> std::optional<std::string> {
                   // Put the identity triangle opposite vertex 1, others in increasing order.
                   int v1 = 0;
                   for (int k = 0; k < 4; ++k) {
                     if (raw.triangles[static_cast<std::size_t>(k)].is_identity()) v1 = 3 - k;
                   }
                   std::array<int, 4> perm{v1, 0, 0, 0};
                   for (int i = 0, k = 1; i < 4; ++i) {
                     if (i != v1) perm[static_cast<std::size_t>(k++)] = i;
                   }
                   const K4Facts f = k4_facts(permute(raw.edges, perm));
                   const F22 a = f.triangles[0], b = f.triangles[1], c = f.triangles[2];
                   if (!f.triangles[3].is_identity()) return std::string("relabeling failed");
                   const std::array<F22, 3> circle{
                       f.edge(0, 1) + f.edge(1, 2) + f.edge(2, 3) + f.edge(3, 0),   // C1 = 1234
                       f.edge(0, 1) + f.edge(1, 3) + f.edge(3, 2) + f.edge(2, 0),   // C2 = 1243
                       f.edge(0, 2) + f.edge(2, 1) + f.edge(1, 3) + f.edge(3, 0)};  // C3 = 1324
                   if (circle[0] != b || circle[1] != a || circle[2] != c) {
                     return std::string("circle signs differ from b, a, c");
                   }
                   // Pair k: edges, and the two circles through both of them.
                   const std::array<std::array<int, 4>, 3> pairs{{{0, 1, 2, 3}, {0, 3, 1, 2}, {0, 2, 1, 3}}};
                   const std::array<std::array<int, 2>, 3> through{{{0, 1}, {0, 2}, {1, 2}}};
                   std::array<F22, 3> sums{};
                   std::array<bool, 3> agree{};
                   for (std::size_t k = 0; k < 3; ++k) {
                     const auto& p = pairs[k];
                     sums[k] = f.edge(p[0], p[1]) + f.edge(p[2], p[3]);
                     agree[k] = sums[k] == circle[static_cast<std::size_t>(through[k][0])] ||
                                sums[k] == circle[static_cast<std::size_t>(through[k][1])];
                     const SignCounts& grp = f.groups[k];
                     if (agree[k] && !grp.support().is_full()) return "agreeing group " + grp.to_string();
                     if (!agree[k] && !shape_is(grp, {2, 2, 0, 0})) return "non-agreeing group " + grp.to_string();
                     ++t.stats[agree[k] ? "agree" : "not_agree"];
                   }
                   // Rows keyed by the first pair sum.
                   struct Row {
                     F22 s1, s2, s3;
                     bool a1, a2, a3;
                   };
                   const std::array<Row, 4> rows{{{a, c, kE, true, true, false},
                                                  {kE, b, a, false, true, true},
                                                  {b, kE, c, true, false, true},
                                                  {c, a, b, false, false, false}}};
                   for (const Row& r : rows) {
                     if (r.s1 != sums[0]) continue;
                     if (r.s2 != sums[1] || r.s3 != sums[2] || r.a1 != agree[0] || r.a2 != agree[1] ||
                         r.a3 != agree[2]) {
                       return std::string("pair sums or agreement differ from the row for ") + to_string(r.s1);
                     }
                   }
                   return std::nullopt;
                 }),
                 {}});

    v.push_back({"lemma4", "in an all-distinct K4, paths from each vertex have signs p,p,q,q,s,s or p,q,s,t,t,t",
                 per_sigma4([](const K4Facts& f, Tally& t) -> std::optional<std::string> {
                   for (const SignCounts& c : f.per_start) {
                     const bool pairs = shape_is(c, {2, 2, 2, 0});
                     if (!pairs && !shape_is(c, {3, 1, 1, 1})) return "start multiset " + c.to_string();
                     ++t.stats[pairs ? "shape_ppqqss" : "shape_pqsttt"];
                   }
                   return std::nullopt;
                 }),
                 {}});

    v.push_back({"lemma_same",
                 "in an all-distinct K4, for each sign g: two equal r,r,s,s,t,t start multisets missing g <=> "
                 "a common-sign triple of sign g <=> no Hamiltonian path of sign g",
                 per_sigma4([](const K4Facts& f, Tally& t) -> std::optional<std::string> {
                   for (F22 g : kAllElements) {
                     bool c1 = false;
                     for (int i = 0; i < 4; ++i)
                       for (int j = i + 1; j < 4; ++j) {
                         const SignCounts& pi = f.per_start[static_cast<std::size_t>(i)];
                         if (pi == f.per_start[static_cast<std::size_t>(j)] && shape_is(pi, {2, 2, 2, 0}) &&
                             pi.count(g) == 0) {
                           c1 = true;
                         }
                       }
                     const bool c2 = has_common_sign_triple(f.edges, g);
                     const bool c3 = f.totals.count(g) == 0;
                     if (c1 != c2 || c2 != c3) {
                       return "sign " + to_string(g) + ": conditions " + std::to_string(c1) + std::to_string(c2) +
                              std::to_string(c3);
                     }
                     if (c1) ++t.stats["with_triple"];
                   }
                   return std::nullopt;
                 }),
                 {}});

    v.push_back({"thm11",
                 "in an all-distinct K4, some vertex starts paths of all four signs <=> no common-sign triple",
                 per_sigma4([](const K4Facts& f, Tally& t) -> std::optional<std::string> {
                   bool rainbow_start = false;
                   for (const SignCounts& c : f.per_start) rainbow_start = rainbow_start || c.support().is_full();
                   bool triple = false;
                   for (F22 g : kAllElements) triple = triple || has_common_sign_triple(f.edges, g);
                   if (rainbow_start == triple) {
                     return std::string("rainbow start ") + (rainbow_start ? "present" : "absent") +
                            ", triple " + (triple ? "present" : "absent");
                   }
                   ++t.stats[triple ? "with_triple" : "without_triple"];
                   return std::nullopt;
                 }),
                 {}});

    v.push_back({"k4_triangle_sum", "the four triangle signs of every K4 sum to e",
                 [](const SignedCompleteGraph& g, std::uint64_t index, const Context&, Tally& t) {
                   ++t.qualifying;
                   for_each_k4(g, [&](const std::string& name, const K4Signs& s) {
                     const K4Facts f = k4_facts(s);
                     const F22 sum = f.triangles[0] + f.triangles[1] + f.triangles[2] + f.triangles[3];
                     if (!sum.is_identity()) t.violate(index, name + " triangle sum " + to_string(sum));
                   });
                 },
                 {}});

    auto full_when = [](std::function<bool(const SignedCompleteGraph&)> qualifies) -> GraphCheck {
      return [qualifies](const SignedCompleteGraph& g, std::uint64_t index, const Context& ctx, Tally& t) {
        if (g.order() <= 5 || !qualifies(g)) return;
        ++t.qualifying;
        const SignSet spec = ctx.spectrum(g);
        if (!spec.is_full()) t.violate(index, "spectrum " + spec.to_string());
      };
    };

    auto has_sigma4 = [](const SignedCompleteGraph& g) {
      bool found = false;
      for_each_k4(g, [&](const std::string&, const K4Signs& s) { found = found || k4_facts(s).all_distinct(); });
      return found;
    };

    v.push_back({"lemma_b", "exactly three triangle signs and n > 5 => every circle sign occurs",
                 full_when([](const SignedCompleteGraph& g) { return triangle_signs(g).size() == 3; }), {},
                 true});
    v.push_back({"lemma_c", "four triangle signs and n > 5 => every circle sign occurs",
                 full_when([](const SignedCompleteGraph& g) { return triangle_signs(g).size() == 4; }), {},
                 true});
    v.push_back({"case_beta", "an all-distinct K4 and n > 5 => every circle sign occurs",
                 full_when(has_sigma4), {}, true});

    v.push_back({"case_alpha_forest",
                 "four triangle signs, no all-distinct K4: after normalizing any hub, one edge of each sign "
                 "away from the hub exists and the four edges form a forest",
                 [has_sigma4](const SignedCompleteGraph& g, std::uint64_t index, const Context&, Tally& t) {
                   if (triangle_signs(g).size() != 4 || has_sigma4(g)) return;
                   ++t.qualifying;
                   const int n = g.order();
                   for (Vertex hub = 1; hub <= n; ++hub) {
                     const SignedCompleteGraph h = normalize_at(g, hub).graph;
                     std::array<std::optional<Edge>, 4> pick;
                     for (Vertex i = 1; i <= n; ++i)
                       for (Vertex j = i + 1; j <= n; ++j) {
                         if (i == hub || j == hub) continue;
                         auto& slot = pick[h.sign(i, j).bits()];
                         if (!slot) slot = Edge(i, j);
                       }
                     if (!std::all_of(pick.begin(), pick.end(), [](auto& p) { return p.has_value(); })) {
                       t.violate(index, "hub " + std::to_string(hub) + " misses an edge sign");
                       continue;
                     }
                     std::vector<int> parent(static_cast<std::size_t>(n + 1));
                     std::iota(parent.begin(), parent.end(), 0);
                     std::function<int(int)> find = [&](int x) {
                       return parent[static_cast<std::size_t>(x)] == x
                                  ? x
                                  : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
                     };
                     for (const auto& e : pick) {
                       const int ru = find(e->u), rv = find(e->v);
                       if (ru == rv) {
                         t.violate(index, "hub " + std::to_string(hub) + ": chosen edges contain a circle");
                         break;
                       }
                       parent[static_cast<std::size_t>(ru)] = rv;
                     }
                   }
                 },
                 {}});

    v.push_back({"main_theorem",
                 "one triangle sign => circle sign fixed by parity; two => parity bound; three or more and "
                 "n > 5 => every circle sign occurs",
                 [](const SignedCompleteGraph& g, std::uint64_t index, const Context& ctx, Tally& t) {
                   ++t.qualifying;
                   const SignSet ts = triangle_signs(g);
                   const auto xs = elements(ts);
                   ++t.stats["diversity_" + std::to_string(ts.size())];
                   const SignSet spec = ctx.spectrum(g);
                   const int n = g.order();
                   if (ts.size() <= 2) {
                     const SignSet bound = parity_bound(n, xs[0], xs.back());
                     if (!spec.subset_of(bound)) {
                       t.violate(index, "diversity " + std::to_string(ts.size()) + ": spectrum " + spec.to_string() +
                                            " escapes " + bound.to_string());
                     }
                   } else if (n > 5 && !spec.is_full()) {
                     t.violate(index, "diversity " + std::to_string(ts.size()) + ": spectrum " + spec.to_string());
                   }
                 },
                 {}, true});
    return v;
  }();
  return specs;
}

inline const LemmaSpec& find_lemma(std::string_view id) {
  for (const auto& s : registry()) {
    if (s.id == id) return s;
  }
  std::string known;
  for (const auto& s : registry()) known += (known.empty() ? "" : ", ") + s.id;
  throw Error("unknown lemma id \"" + std::string(id) + "\" (known: " + known + ")");
}

struct VerifyOptions {
  int jobs = 1;
  /// Exhaustive domains above this size need `force`.
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 22;
  bool force = false;
};

namespace detail {

template <typename Body>
Tally run_partitioned(std::uint64_t size, int jobs, Body body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || size < 2) {
    Tally t;
    for (std::uint64_t i = 0; i < size; ++i) body(i, t);
    return t;
  }
  const auto workers = static_cast<std::uint64_t>(jobs);
  std::vector<Tally> parts(workers);
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t lo = size * w / workers, hi = size * (w + 1) / workers;
      for (std::uint64_t i = lo; i < hi; ++i) body(i, parts[w]);
    });
  }
  for (auto& th : pool) th.join();
  Tally out;
  for (auto& p : parts) out.merge(std::move(p));
  return out;
}

}  // namespace detail

inline VerificationReport verify(std::string_view id, const Scope& scope, const VerifyOptions& opt = {}) {
  const LemmaSpec& spec = find_lemma(id);
  VerificationReport r;
  r.id = spec.id;
  r.claim = spec.claim;
  r.scope = scope.to_string();
  r.jobs = std::max(1, opt.jobs);
  const auto start = std::chrono::steady_clock::now();

  if (scope.kind == ScopeKind::kExhaustiveGroup) {
    if (!spec.group_check) throw Error(spec.id + " is checked over graphs, not the group domain");
    r.domain = "all (y1, y2, z1, z2) in (F2^2)^4; qualifying: y1 != y2 non-identity, z1 != z2";
    r.domain_size = 256;
    Tally t = detail::run_partitioned(256, 1, [&](std::uint64_t i, Tally& tally) {
      ++tally.scanned;
      const F22 y1 = F22::from_bits(static_cast<unsigned>(i & 3u)),
                y2 = F22::from_bits(static_cast<unsigned>((i >> 2) & 3u));
      const F22 z1 = F22::from_bits(static_cast<unsigned>((i >> 4) & 3u)),
                z2 = F22::from_bits(static_cast<unsigned>((i >> 6) & 3u));
      if (y1 == y2 || y1.is_identity() || y2.is_identity() || z1 == z2) return;
      ++tally.stats["valid_tuples"];
      spec.group_check(y1, y2, z1, z2, i, tally);
    });
    r.scanned = t.scanned;
    r.qualifying = t.qualifying;
    r.stats = std::move(t.stats);
    r.violations = std::move(t.violations);
    r.violation_count = t.violation_count;
  } else {
    if (!spec.graph_check) throw Error(spec.id + " is checked over the group domain only (scope exhaustive_group)");
    Context ctx;
    ctx.n = scope.n;
    std::function<SignedCompleteGraph(std::uint64_t)> instance;
    std::optional<NormalizedLabelings> labelings;
    switch (scope.kind) {
      case ScopeKind::kExhaustiveK4:
        r.domain = "all 4^6 labelings of K4";
        r.domain_size = 4096;
        instance = [](std::uint64_t i) { return k4_labeling(static_cast<std::uint32_t>(i)); };
        break;
      case ScopeKind::kExhaustiveNormalized:
        labelings.emplace(scope.n);
        r.domain = "all 4^" + std::to_string(labelings->free_edge_count()) + " labelings of K" +
                   std::to_string(scope.n) + " with every edge at vertex 1 set to e";
        r.domain_size = labelings->size();
        if (r.domain_size > opt.exhaustive_cap && !opt.force) {
          throw Error("exhaustive domain of " + std::to_string(r.domain_size) +
                      " instances exceeds the cap; pass force to run it");
        }
        instance = [&labelings](std::uint64_t i) { return labelings->at(i); };
        break;
      case ScopeKind::kRandom:
        if (scope.n < 3) throw Error("random scope needs n >= 3");
        r.domain = std::to_string(scope.count) + " seeded random labelings of K" + std::to_string(scope.n);
        r.domain_size = scope.count;
        r.seed = scope.seed;
        instance = [&scope](std::uint64_t i) { return gen_random(scope.n, derive_seed(scope.seed, i)); };
        break;
      case ScopeKind::kExhaustiveGroup: break;
    }
    if (spec.needs_spectrum) {
      if (scope.n > kDefaultEnumerationBound) {
        throw Error(spec.id + " enumerates circles; n = " + std::to_string(scope.n) + " exceeds the bound");
      }
      if (scope.n <= 8) ctx.table = std::make_shared<const CircleTable>(scope.n);
    }
    Tally t = detail::run_partitioned(r.domain_size, opt.jobs, [&](std::uint64_t i, Tally& tally) {
      ++tally.scanned;
      spec.graph_check(instance(i), i, ctx, tally);
    });
    r.scanned = t.scanned;
    r.qualifying = t.qualifying;
    r.stats = std::move(t.stats);
    r.violations = std::move(t.violations);
    r.violation_count = t.violation_count;
  }
  std::sort(r.violations.begin(), r.violations.end(),
            [](const Violation& x, const Violation& y) { return x.index < y.index; });
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace dsign::lab
