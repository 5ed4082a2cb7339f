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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dsign/census.hpp"
#include "dsign/generate.hpp"
#include "dsign/oracle.hpp"
#include "dsign/switching.hpp"

namespace dsign {
namespace {

TEST(SpectrumTest, CircleCounts) {
  EXPECT_EQ(hamiltonian_spectrum(SignedCompleteGraph(4)).total(), 3u);
  EXPECT_EQ(hamiltonian_spectrum(SignedCompleteGraph(7)).total(), 360u);
  const Spectrum s = hamiltonian_spectrum(SignedCompleteGraph(6));
  EXPECT_EQ(s.counts.count(kE), 60u);
  EXPECT_EQ(s.realized(), SignSet{kE});
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(hamiltonian_spectrum(SignedCompleteGraph(n)).total(), hamiltonian_circle_count(n));
  }
  EXPECT_EQ(hamiltonian_circle_count(10), 181440u);
}

TEST(SpectrumTest, BoundGuard) {
  EXPECT_THROW(hamiltonian_spectrum(SignedCompleteGraph(11)), Error);
  EXPECT_THROW(hamiltonian_spectrum(SignedCompleteGraph(7), 6), Error);
  EXPECT_THROW(hamiltonian_spectrum(SignedCompleteGraph(2)), Error);
}

TEST(SpectrumTest, CirclesAreDistinctAndCanonical) {
  std::set<std::vector<Vertex>> seen;
  const CircleTable table(6);
  for (const auto& c : table.circles()) {
    EXPECT_EQ(Circle(c).canonical().to_string(), Circle(c).to_string());
    EXPECT_TRUE(seen.insert(c).second);
  }
  EXPECT_EQ(seen.size(), 60u);
}

TEST(SpectrumTest, WitnessesAndTableAgree) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 5;
    const SignedCompleteGraph g = gen_random(n, rng());
    const Spectrum s = hamiltonian_spectrum(g);
    const CircleTable table(n);
    EXPECT_EQ(table.counts(g), s.counts);
    EXPECT_EQ(table.realized(g), s.realized());
    for (F22 x : kAllElements) {
      const auto& w = s.witness(x);
      EXPECT_EQ(w.has_value(), s.counts.count(x) > 0);
      if (!w) continue;
      EXPECT_EQ(walk_sign(g, *w), x);
      EXPECT_EQ(static_cast<int>(w->size()), n);
      EXPECT_EQ(w->canonical().to_string(), w->to_string());
    }
  }
}

TEST(SpectrumTest, PartitionsAndThreadsAgree) {
  const SignedCompleteGraph g = gen_random(8, 99);
  const Spectrum serial = hamiltonian_spectrum(g);
  const Spectrum threaded = hamiltonian_spectrum(g, kDefaultEnumerationBound, 3);
  EXPECT_EQ(serial.counts, threaded.counts);
  for (F22 x : kAllElements) EXPECT_EQ(serial.witness(x), threaded.witness(x));
  SignCounts sum;
  for (Vertex s = 2; s < 8; ++s) sum += hamiltonian_spectrum_partition(g, s).counts;
  EXPECT_EQ(sum, serial.counts);
}

TEST(SpectrumTest, InvariantUnderSwitchingAndRelabeling) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const SignedCompleteGraph g = gen_random(6, rng());
    const SignCounts base = hamiltonian_spectrum(g).counts;
    EXPECT_EQ(hamiltonian_spectrum(normalize_at(g, 1 + trial % 6).graph).counts, base);
    std::vector<Vertex> perm(6);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(hamiltonian_spectrum(relabeled(g, perm)).counts, base);
  }
}

// Two triangle signs {x, y} at even n: every circle has sign e or x + y.
TEST(SpectrumTest, DiversityTwoAtSixStaysInPairSum) {
  std::mt19937_64 rng(10);
  int checked = 0;
  const CircleTable table(6);
  for (int trial = 0; trial < 200000 && checked < 500; ++trial) {
    // Sparse labelings keep the triangle diversity low.
    std::vector<F22> signs(15);
    for (auto& s : signs) s = (rng() % 4 == 0) ? kA : kE;
    const SignedCompleteGraph g(6, signs);
    const TriangleCensus c = triangle_census(g);
    if (c.diversity() != 2) continue;
    std::vector<F22> xy;
    for (F22 s : kAllElements) {
      if (c.signs().contains(s)) xy.push_back(s);
    }
    EXPECT_TRUE(table.realized(g).subset_of(SignSet{kE, xy[0] + xy[1]}));
    ++checked;
  }
  EXPECT_EQ(checked, 500);
}

TEST(PathReportTest, ShareVertexK4) {
  const PathMultisetReport r = k4_path_report(share_vertex_k4());
  EXPECT_EQ(r.paths.size(), 12u);
  EXPECT_EQ(r.totals.total(), 12u);
  SignCounts p1;
  p1.add(kE, 2);
  p1.add(kB, 2);
  p1.add(kC, 2);
  EXPECT_EQ(r.per_start[0], p1);
  EXPECT_EQ(r.totals.count(kA), 0u);
  for (const auto& group : r.groups) EXPECT_EQ(group.size(), 4u);
  EXPECT_EQ(hamiltonian_paths_spectrum(share_vertex_k4(), 1), p1);
}

TEST(PathReportTest, IdentityK4AndErrors) {
  const PathMultisetReport r = k4_path_report(SignedCompleteGraph(4));
  EXPECT_EQ(r.totals.count(kE), 12u);
  for (const auto& s : r.per_start) EXPECT_EQ(s.count(kE), 6u);
  EXPECT_THROW(k4_path_report(SignedCompleteGraph(5)), Error);
  EXPECT_EQ(hamiltonian_paths_spectrum(SignedCompleteGraph(5), 2).count(kE), 24u);
  EXPECT_THROW(hamiltonian_paths_spectrum(SignedCompleteGraph(12), 1), Error);
}

TEST(PathReportTest, ExhaustiveK4Properties) {
  for (std::uint32_t i = 0; i < 4096; ++i) {
    const SignedCompleteGraph g = k4_labeling(i);
    const PathMultisetReport r = k4_path_report(g);
    std::set<std::vector<Vertex>> distinct;
    for (const auto& p : r.paths) {
      distinct.insert(std::vector<Vertex>(p.path.vertices().begin(), p.path.vertices().end()));
      EXPECT_EQ(walk_sign(g, p.path), p.sign);
    }
    EXPECT_EQ(distinct.size(), 12u);
    for (Vertex v = 1; v <= 4; ++v) {
      EXPECT_EQ(r.per_start[static_cast<std::size_t>(v - 1)], hamiltonian_paths_spectrum(g, v));
    }
    if (!classify_k4(g, {1, 2, 3, 4}).is_all_distinct()) continue;
    for (F22 s : kAllElements) EXPECT_EQ(r.totals.count(s) % 2, 0u) << "labeling " << i;
    for (const auto& per : r.per_start) {
      const auto shape = per.shape();
      EXPECT_TRUE((shape == std::array<std::uint64_t, 4>{2, 2, 2, 0}) ||
                  (shape == std::array<std::uint64_t, 4>{3, 1, 1, 1}));
    }
  }
}

// Named all-distinct K4s: C1 = 1234, C2 = 1243, C3 = 1324 have signs b, a, c,
// and removing an edge from a circle leaves a path of sign circle + edge.
TEST(PathReportTest, NamedCircleSigns) {
  for (const SignedCompleteGraph& g : {share_vertex_k4(), triangle_k4()}) {
    const Circle c1({1, 2, 3, 4}), c2({1, 2, 4, 3}), c3({1, 3, 2, 4});
    EXPECT_EQ(walk_sign(g, c1), kB);
    EXPECT_EQ(walk_sign(g, c2), kA);
    EXPECT_EQ(walk_sign(g, c3), kC);
    for (const Circle& c : {c1, c2, c3}) {
      const auto vs = c.vertices();
      for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Vertex> open;
        for (std::size_t k = 1; k <= 4; ++k) open.push_back(vs[(i + k) % 4]);
        EXPECT_EQ(walk_sign(g, Path(open)), walk_sign(g, c) + g.sign(vs[i], vs[(i + 1) % 4]));
      }
    }
  }
}

}  // namespace
}  // namespace dsign
