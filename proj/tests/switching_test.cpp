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

#include "dsign/census.hpp"
#include "dsign/generate.hpp"
#include "dsign/switching.hpp"

namespace dsign {
namespace {

SwitchingFunction random_switching(int n, std::mt19937_64& rng) {
  std::vector<F22> z(static_cast<std::size_t>(n));
  for (auto& x : z) x = F22::from_bits(static_cast<unsigned>(rng() >> 62));
  return SwitchingFunction(std::move(z));
}

TEST(SwitchingTest, IdentityAndConstantSwitchingsFixEdges) {
  const SignedCompleteGraph g = gen_random(6, 3);
  EXPECT_EQ(apply_switching(g, SwitchingFunction::identity(6)), g);
  EXPECT_EQ(apply_switching(g, SwitchingFunction(std::vector<F22>(6, kA))), g);
  EXPECT_THROW(apply_switching(g, SwitchingFunction::identity(5)), Error);
}

TEST(SwitchingTest, PreservesCircleSignsAndCensus) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const SignedCompleteGraph g = gen_random(n, rng());
    const SwitchingFunction z = random_switching(n, rng);
    const SignedCompleteGraph h = apply_switching(g, z);
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 1);
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(3 + rng() % static_cast<std::size_t>(n - 2));
    const Circle c(vs);
    ASSERT_EQ(walk_sign(g, c), walk_sign(h, c));
    ASSERT_EQ(triangle_census(g).counts, triangle_census(h).counts);
  }
}

TEST(NormalizeTest, ShareVertexK4AtV4) {
  const SignedCompleteGraph g = share_vertex_k4();
  const Normalization norm = normalize_at(g, 4);
  EXPECT_EQ(norm.graph.sign(1, 4), kE);
  EXPECT_EQ(norm.graph.sign(2, 4), kE);
  EXPECT_EQ(norm.graph.sign(3, 4), kE);
  EXPECT_EQ(norm.graph.sign(1, 2), kB);
  EXPECT_EQ(norm.graph.sign(1, 2), triangle_sign(g, Triangle(1, 2, 4)));
  EXPECT_TRUE(is_normalized_at(norm.graph, 4));
  EXPECT_FALSE(is_normalized_at(g, 4));
}

TEST(NormalizeTest, FixedPoint) {
  const SignedCompleteGraph g = gen_exhaustive_normalized(5).at(123);
  const Normalization norm = normalize_at(g, 1);
  EXPECT_EQ(norm.graph, g);
  EXPECT_TRUE(norm.switching.is_identity());
}

TEST(NormalizeTest, EdgesBecomeHubTriangleSigns) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const SignedCompleteGraph g = gen_random(n, rng());
    const Vertex v = 1 + static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    const SignedCompleteGraph h = normalize_at(g, v).graph;
    for (Vertex u = 1; u <= n; ++u) {
      if (u == v) continue;
      ASSERT_EQ(h.sign(u, v), kE);
      for (Vertex w = u + 1; w <= n; ++w) {
        if (w == v) continue;
        ASSERT_EQ(h.sign(u, w), triangle_sign(g, Triangle(u, w, v)));
      }
    }
  }
  EXPECT_THROW(normalize_at(SignedCompleteGraph(4), 0), Error);
}

}  // namespace
}  // namespace dsign
