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

#include <random>

#include "dsign/census.hpp"
#include "dsign/generate.hpp"
#include "dsign/oracle.hpp"
#include "dsign/solver.hpp"

namespace dsign {
namespace {

SignedCompleteGraph with_edges(int n, std::initializer_list<SignedEdge> overrides) {
  std::vector<F22> signs(SignedCompleteGraph::pair_count(n));
  for (const SignedEdge& e : overrides) signs[SignedCompleteGraph::edge_index(n, e.u, e.v)] = e.sign;
  return SignedCompleteGraph(n, std::move(signs));
}

SignedCompleteGraph random_with_diversity(int n, int diversity, std::mt19937_64& rng) {
  for (;;) {
    const SignedCompleteGraph g = gen_random(n, rng());
    if (triangle_census(g).diversity() == diversity) return g;
  }
}

void expect_full_construction(const SignedCompleteGraph& g) {
  const ConstructionOutcome out = construct_witnesses(g);
  ASSERT_EQ(out.status, ConstructionStatus::kConstructed) << out.detail;
  ASSERT_TRUE(out.witnesses.has_value());
  EXPECT_TRUE(verify_witnesses(g, *out.witnesses).ok);
  SignSet got;
  for (const Witness& w : out.witnesses->witnesses) got.insert(w.sign);
  EXPECT_EQ(got, hamiltonian_spectrum(g).realized());
}

TEST(PredictTest, Examples) {
  const SpectrumPrediction id = predict_spectrum(SignedCompleteGraph(6));
  EXPECT_EQ(id.kind, PredictionKind::kSingleton);
  EXPECT_EQ(id.allowed, SignSet{kE});

  // A single a-edge at n = 7: triangles through it are a, the rest e.
  const SpectrumPrediction odd = predict_spectrum(with_edges(7, {{2, 3, kA}}));
  EXPECT_EQ(odd.kind, PredictionKind::kParityPair);
  EXPECT_EQ(odd.allowed, (SignSet{kE, kA}));

  // Two triangle signs a and b at n = 7.
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100000; ++i) {
    std::vector<F22> signs(21);
    for (auto& s : signs) s = rng() % 2 ? kA : kB;
    const SignedCompleteGraph g(7, signs);
    if (triangle_census(g).signs() != SignSet{kA, kB}) continue;
    const SpectrumPrediction p = predict_spectrum(g);
    EXPECT_EQ(p.kind, PredictionKind::kParityPair);
    EXPECT_EQ(p.allowed, (SignSet{kA, kB}));
    EXPECT_TRUE(p.admits(hamiltonian_spectrum(g).realized()));
    break;
  }

  const SpectrumPrediction full = predict_spectrum(random_with_diversity(6, 4, rng));
  EXPECT_EQ(full.kind, PredictionKind::kFull);
  EXPECT_EQ(predict_spectrum(random_with_diversity(5, 4, rng)).kind, PredictionKind::kDeferred);
  EXPECT_THROW(predict_spectrum(SignedCompleteGraph(2)), Error);
}

// Single sign x: every circle is n - 2 fan triangles of sign x.
TEST(PredictTest, SingletonMatchesOracle) {
  for (int n = 3; n <= 8; ++n) {
    for (F22 x : kAllElements) {
      // Constant labeling x: every triangle has sign x.
      const SignedCompleteGraph g(n, x);
      const SpectrumPrediction p = predict_spectrum(g);
      ASSERT_EQ(p.kind, PredictionKind::kSingleton);
      EXPECT_EQ(p.allowed, hamiltonian_spectrum(g).realized());
    }
  }
}

TEST(ConstructTest, RefusalsAndUnsupported) {
  const ConstructionOutcome small = construct_witnesses(gen_random(5, 1));
  EXPECT_EQ(small.status, ConstructionStatus::kUnsupported);
  const ConstructionOutcome flat = construct_witnesses(SignedCompleteGraph(7));
  EXPECT_EQ(flat.status, ConstructionStatus::kRefused);
  EXPECT_EQ(flat.prediction.kind, PredictionKind::kSingleton);
  EXPECT_FALSE(flat.witnesses.has_value());
}

TEST(ConstructTest, ConsecutiveTripleLedger) {
  std::mt19937_64 rng(2);
  int hits = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const SignedCompleteGraph g = random_with_diversity(6, 3, rng);
    const ConstructionOutcome out = construct_witnesses(g);
    ASSERT_EQ(out.status, ConstructionStatus::kConstructed);
    const auto& trace = out.witnesses->trace;
    if (trace.size() < 2 || trace[1] != "consecutive triple") continue;
    ++hits;
    SignSet got;
    for (const Witness& w : out.witnesses->witnesses) got.insert(w.sign);
    EXPECT_TRUE(got.is_full());
  }
  EXPECT_GT(hits, 0);
}

TEST(ConstructTest, RandomInstancesMatchOracle) {
  std::mt19937_64 rng(3);
  for (int n = 6; n <= 8; ++n) {
    for (int trial = 0; trial < 150; ++trial) {
      const SignedCompleteGraph g = gen_random(n, rng());
      if (triangle_census(g).diversity() < 3) continue;
      expect_full_construction(g);
    }
  }
}

TEST(ConstructTest, StridedNormalizedSweepAtSix) {
  const NormalizedLabelings all(6);
  for (std::uint64_t i = 0; i < all.size(); i += 211) {
    const SignedCompleteGraph g = all.at(i);
    const int d = triangle_census(g).diversity();
    const ConstructionOutcome out = construct_witnesses(g);
    if (d <= 2) {
      EXPECT_EQ(out.status, ConstructionStatus::kRefused);
      EXPECT_TRUE(out.prediction.admits(hamiltonian_spectrum(g).realized()));
      continue;
    }
    ASSERT_EQ(out.status, ConstructionStatus::kConstructed) << "index " << i << ": " << out.detail;
    EXPECT_TRUE(verify_witnesses(g, *out.witnesses).ok);
  }
}

// Hub 6 normalized; the share-a-vertex K4 on 1..4 and the edge 3-5 of sign c.
TEST(FourSignPathTest, EmbeddedShareVertexK4) {
  const SignedCompleteGraph g = with_edges(6, {{1, 2, kB}, {1, 3, kC}, {1, 4, kA},
                                               {2, 3, kE}, {3, 4, kA}, {2, 4, kA}, {3, 5, kC}});
  ASSERT_TRUE(is_normalized_at(g, 6));
  const Path p({4, 1, 2, 3, 5});
  const WitnessSet ws = build_from_four_sign_path(g, p, 6);
  EXPECT_TRUE(verify_witnesses(g, ws).ok);
  EXPECT_TRUE(hamiltonian_spectrum(g).realized().is_full());
  EXPECT_THROW(build_from_four_sign_path(g, Path({1, 2, 3}), 6), Error);
  EXPECT_THROW(build_from_four_sign_path(g, Path({4, 1, 2, 3, 5}), 1), Error);
}

TEST(FourSignPathTest, ClosingThroughHubAddsIdentity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const SignedCompleteGraph g = normalize_at(gen_random(7, rng()), 7).graph;
    std::vector<Vertex> vs{1, 2, 3, 4, 5, 6};
    std::shuffle(vs.begin(), vs.end(), rng);
    const F22 open = walk_sign(g, Path(vs));
    vs.push_back(7);
    EXPECT_EQ(walk_sign(g, Circle(vs)), open);
  }
}

TEST(NecklaceTest, RandomEightMatchesOracle) {
  std::mt19937_64 rng(5);
  int built = 0;
  for (int trial = 0; trial < 3000 && built < 30; ++trial) {
    const SignedCompleteGraph g = gen_random(8, rng());
    const auto k4 = find_sigma4_star(g);
    if (!k4) continue;
    for (Vertex v5 = 1; v5 <= 8; ++v5) {
      if (std::find(k4->begin(), k4->end(), v5) != k4->end()) continue;
      if (classify_k4(normalize_at(g, v5).graph, *k4).triple) continue;
      const auto ws = necklace_construct(g, *k4, v5);
      ASSERT_TRUE(ws.has_value());
      EXPECT_TRUE(verify_witnesses(g, *ws).ok);
      EXPECT_TRUE(hamiltonian_spectrum(g).realized().is_full());
      ++built;
      break;
    }
  }
  EXPECT_GT(built, 0);
}

TEST(VerifyWitnessesTest, RejectsTampering) {
  std::mt19937_64 rng(6);
  const SignedCompleteGraph g = random_with_diversity(6, 4, rng);
  const ConstructionOutcome out = construct_witnesses(g);
  ASSERT_TRUE(out.witnesses.has_value());
  WitnessSet bad = *out.witnesses;
  bad.witnesses[0].sign = bad.witnesses[0].sign + kA;
  EXPECT_FALSE(verify_witnesses(g, bad).ok);
  bad = *out.witnesses;
  bad.witnesses[1] = bad.witnesses[0];
  EXPECT_FALSE(verify_witnesses(g, bad).ok);
  bad = *out.witnesses;
  bad.witnesses[2].circle = Circle({1, 2, 3});
  EXPECT_FALSE(verify_witnesses(g, bad).ok);
  bad.witnesses.pop_back();
  EXPECT_FALSE(verify_witnesses(g, bad).ok);
}

}  // namespace
}  // namespace dsign
