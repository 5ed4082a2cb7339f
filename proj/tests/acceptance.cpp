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

// Acceptance suite: one PASS/FAIL line per criterion, limits pinned below.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dsign/dsign.hpp"

namespace dsign {
namespace {

// Pinned limits.
constexpr double kK4SuiteSeconds = 5.0;
constexpr double kGroupSuiteSeconds = 1.0;
constexpr double kSweepSingleSeconds = 600.0;
constexpr double kSweepEightSeconds = 120.0;
constexpr int kSweepWorkers = 8;
constexpr std::uint64_t kSolverSubsample = 100000;
constexpr std::uint64_t kSolverSubsampleSeed = 20260601;
constexpr std::uint64_t kRandomSevenCount = 100000;
constexpr std::uint64_t kRandomSevenSeed = 20260607;
constexpr double kRandomSevenSeconds = 300.0;
constexpr int kSwitchingTriples = 10000;
constexpr std::uint64_t kSwitchingSeed = 20260613;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

int failures = 0;

void report(int number, const std::string& title, const Outcome& o) {
  std::printf("[%s] criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", number, title.c_str(), o.summary.c_str());
  for (const auto& d : o.details) std::printf("         %s\n", d.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

std::string lab_line(const lab::VerificationReport& r) {
  std::ostringstream os;
  os << r.id << ": " << (r.pass() ? "ok" : "VIOLATED") << ", " << r.scanned << " scanned, " << r.qualifying
     << " qualifying, " << r.violation_count << " violations";
  if (!r.violations.empty()) os << " (first at " << r.violations.front().index << ": " << r.violations.front().message << ")";
  return os.str();
}

// Independent witness re-check: Hamiltonian, recomputed sign, four distinct signs.
bool witnesses_sound(const SignedCompleteGraph& g, const WitnessSet& ws) {
  const int n = g.order();
  SignSet signs;
  for (const Witness& w : ws.witnesses) {
    const auto vs = w.circle.vertices();
    if (static_cast<int>(vs.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    F22 sum = kE;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Vertex v = vs[i];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      sum = sum + g.sign(v, vs[(i + 1) % vs.size()]);
    }
    if (sum != w.sign || signs.contains(sum)) return false;
    signs.insert(sum);
  }
  return ws.witnesses.size() == 4 && signs.is_full();
}

std::string trace_key(const WitnessSet& ws) {
  std::string key;
  for (std::size_t i = 0; i < ws.trace.size() && i < 3; ++i) key += (i ? " / " : "") + ws.trace[i];
  return key;
}

// ---------------------------------------------------------------------------

Outcome k4_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::uint64_t violations = 0;
  for (const char* id : {"k4_triangle_sum", "lemma14", "key_lemma", "lemma4", "lemma_same", "thm11", "table1"}) {
    const lab::VerificationReport r = lab::verify(id, lab::Scope::exhaustive_k4());
    violations += r.violation_count;
    o.pass = o.pass && r.pass();
    o.details.push_back(lab_line(r));
  }
  // Oracle cross-check: path parity and start shapes from the enumerated path report.
  std::uint64_t sigma4 = 0;
  for (std::uint32_t i = 0; i < 4096; ++i) {
    const SignedCompleteGraph g = k4_labeling(i);
    if (!classify_k4(g, {1, 2, 3, 4}).is_all_distinct()) continue;
    ++sigma4;
    const PathMultisetReport r = k4_path_report(g);
    for (F22 s : kAllElements) {
      if (r.totals.count(s) % 2) ++violations, o.pass = false;
    }
    for (const SignCounts& c : r.per_start) {
      const auto sh = c.shape();
      if (sh != std::array<std::uint64_t, 4>{2, 2, 2, 0} && sh != std::array<std::uint64_t, 4>{3, 1, 1, 1}) {
        ++violations;
        o.pass = false;
      }
    }
  }
  o.details.push_back("oracle path report cross-check on " + std::to_string(sigma4) + " all-distinct labelings");
  const double t = seconds_since(t0);
  o.pass = o.pass && t < kK4SuiteSeconds;
  o.summary = std::to_string(violations) + " violations over 4096 labelings, " + fmt_seconds(t) + " (limit " +
              fmt_seconds(kK4SuiteSeconds) + ")";
  return o;
}

Outcome group_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::uint64_t violations = 0;
  for (const char* id : {"lemma11", "lemma12"}) {
    const lab::VerificationReport r = lab::verify(id, lab::Scope::exhaustive_group());
    violations += r.violation_count;
    o.pass = o.pass && r.pass();
    o.details.push_back(lab_line(r));
  }
  const double t = seconds_since(t0);
  o.pass = o.pass && t < kGroupSuiteSeconds;
  o.summary = std::to_string(violations) + " violations over 256 tuples, " + fmt_seconds(t) + " (limit " +
              fmt_seconds(kGroupSuiteSeconds) + ")";
  return o;
}

Outcome sweep_six() {
  Outcome o;
  const lab::VerificationReport one = lab::verify("main_theorem", lab::Scope::exhaustive_normalized(6), {.jobs = 1});
  const lab::VerificationReport eight =
      lab::verify("main_theorem", lab::Scope::exhaustive_normalized(6), {.jobs = kSweepWorkers});
  o.pass = one.pass() && eight.pass() && one.stats == eight.stats && one.elapsed_seconds < kSweepSingleSeconds &&
           eight.elapsed_seconds < kSweepEightSeconds;
  o.details.push_back(lab_line(one));
  std::string by_div = "diversity counts:";
  for (const auto& [k, v] : one.stats) by_div += " " + k + "=" + std::to_string(v);
  o.details.push_back(by_div);
  o.details.push_back("hardware threads available: " + std::to_string(std::thread::hardware_concurrency()));
  o.summary = std::to_string(one.violation_count) + " violations over " + std::to_string(one.scanned) +
              " labelings; 1 worker " + fmt_seconds(one.elapsed_seconds) + " (limit " +
              fmt_seconds(kSweepSingleSeconds) + "), " + std::to_string(kSweepWorkers) + " workers " +
              fmt_seconds(eight.elapsed_seconds) + " (limit " + fmt_seconds(kSweepEightSeconds) + ")";
  return o;
}

Outcome solver_six() {
  Outcome o;
  const auto t0 = Clock::now();
  const NormalizedLabelings all(6);
  std::uint64_t eligible = 0, constructed = 0, unsound = 0, search_backed = 0;
  std::map<std::string, std::uint64_t> branches;
  std::vector<std::string> first_bad;
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    const SignedCompleteGraph g = all.at(i);
    if (triangle_census(g).diversity() < 3) continue;
    ++eligible;
    const ConstructionOutcome out = construct_witnesses(g);
    if (out.status != ConstructionStatus::kConstructed || !out.witnesses) {
      if (first_bad.size() < 5) first_bad.push_back("index " + std::to_string(i) + ": " + to_string(out.status));
      continue;
    }
    ++constructed;
    if (!witnesses_sound(g, *out.witnesses)) {
      ++unsound;
      if (first_bad.size() < 5) first_bad.push_back("index " + std::to_string(i) + ": witness re-check failed");
    }
    search_backed += out.witnesses->search_backed ? 1 : 0;
    ++branches[trace_key(*out.witnesses)];
  }
  const double sweep_t = seconds_since(t0);

  // Seeded subsample: witness sign set equals the enumerated spectrum.
  const auto t1 = Clock::now();
  const CircleTable table(6);
  std::mt19937_64 rng(kSolverSubsampleSeed);
  std::uint64_t sampled = 0, mismatched = 0;
  while (sampled < kSolverSubsample) {
    const SignedCompleteGraph g = all.at(rng() % all.size());
    if (triangle_census(g).diversity() < 3) continue;
    ++sampled;
    const ConstructionOutcome out = construct_witnesses(g);
    SignSet got;
    if (out.witnesses) {
      for (const Witness& w : out.witnesses->witnesses) got.insert(w.sign);
    }
    if (got != table.counts(g).support()) ++mismatched;
  }
  const double sample_t = seconds_since(t1);

  o.pass = constructed == eligible && unsound == 0 && mismatched == 0;
  o.summary = std::to_string(constructed) + "/" + std::to_string(eligible) + " diversity>=3 instances constructed, " +
              std::to_string(unsound) + " failed re-verification; subsample " + std::to_string(sampled) + ", " +
              std::to_string(mismatched) + " spectrum mismatches; " + fmt_seconds(sweep_t) + " + " +
              fmt_seconds(sample_t);
  o.details.push_back("search-backed witness sets: " + std::to_string(search_backed));
  for (const auto& [k, v] : branches) o.details.push_back("branch " + k + ": " + std::to_string(v));
  for (const auto& b : first_bad) o.details.push_back(b);
  return o;
}

Outcome random_seven() {
  Outcome o;
  const auto t0 = Clock::now();
  const CircleTable table(7);
  std::uint64_t not_admitted = 0, eligible = 0, failed = 0, wrong_count = 0;
  std::map<std::string, std::uint64_t> branches;
  for (std::uint64_t i = 0; i < kRandomSevenCount; ++i) {
    const SignedCompleteGraph g = gen_random(7, derive_seed(kRandomSevenSeed, i));
    const SignCounts counts = table.counts(g);
    if (counts.total() != 360) ++wrong_count;
    const SpectrumPrediction p = predict_spectrum(g);
    if (!p.admits(counts.support())) ++not_admitted;
    if (p.diversity < 3) continue;
    ++eligible;
    const ConstructionOutcome out = construct_witnesses(g);
    if (out.status != ConstructionStatus::kConstructed || !out.witnesses || !witnesses_sound(g, *out.witnesses)) {
      ++failed;
      continue;
    }
    ++branches[trace_key(*out.witnesses)];
  }
  const double t = seconds_since(t0);
  o.pass = not_admitted == 0 && failed == 0 && wrong_count == 0 && t < kRandomSevenSeconds;
  o.summary = std::to_string(kRandomSevenCount) + " instances (seed " + std::to_string(kRandomSevenSeed) + "): " +
              std::to_string(not_admitted) + " prediction misses, " + std::to_string(failed) + "/" +
              std::to_string(eligible) + " construction failures, " + fmt_seconds(t) + " (limit " +
              fmt_seconds(kRandomSevenSeconds) + ")";
  for (const auto& [k, v] : branches) o.details.push_back("branch " + k + ": " + std::to_string(v));
  return o;
}

Outcome switching_invariance() {
  Outcome o;
  std::mt19937_64 rng(kSwitchingSeed);
  std::uint64_t circle_bad = 0, census_bad = 0, norm_bad = 0;
  for (int trial = 0; trial < kSwitchingTriples; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const SignedCompleteGraph g = gen_random(n, rng());
    std::vector<F22> z(static_cast<std::size_t>(n));
    for (auto& x : z) x = F22::from_bits(static_cast<unsigned>(rng() >> 62));
    const SignedCompleteGraph h = apply_switching(g, SwitchingFunction(z));
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 1);
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(3 + rng() % static_cast<std::size_t>(n - 2));
    const Circle c(vs);
    if (walk_sign(g, c) != walk_sign(h, c)) ++circle_bad;
    if (triangle_census(g).counts != triangle_census(h).counts) ++census_bad;
    const Vertex hub = 1 + static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    const SignedCompleteGraph m = normalize_at(g, hub).graph;
    for (Vertex u = 1; u <= n; ++u) {
      if (u == hub) continue;
      if (!m.sign(u, hub).is_identity()) ++norm_bad;
      for (Vertex w = u + 1; w <= n; ++w) {
        if (w != hub && m.sign(u, w) != g.sign(u, w) + g.sign(u, hub) + g.sign(w, hub)) ++norm_bad;
      }
    }
  }
  o.pass = circle_bad == 0 && census_bad == 0 && norm_bad == 0;
  o.summary = std::to_string(kSwitchingTriples) + " triples at 3 <= n <= 8: " + std::to_string(circle_bad) +
              " circle-sign, " + std::to_string(census_bad) + " census, " + std::to_string(norm_bad) +
              " normalization mismatches";
  return o;
}

Outcome count_fixtures() {
  Outcome o;
  const PathMultisetReport paths = k4_path_report(SignedCompleteGraph(4));
  std::set<std::vector<Vertex>> distinct;
  for (const SignedPath& p : paths.paths) {
    distinct.insert(std::vector<Vertex>(p.path.vertices().begin(), p.path.vertices().end()));
  }
  const std::uint64_t c4 = hamiltonian_spectrum(SignedCompleteGraph(4)).total();
  const std::uint64_t c6 = hamiltonian_spectrum(SignedCompleteGraph(6)).total();
  const std::uint64_t c7 = hamiltonian_spectrum(SignedCompleteGraph(7)).total();
  o.pass = paths.paths.size() == 12 && distinct.size() == 12 && c4 == 3 && c6 == 60 && c7 == 360;
  o.summary = "K4 paths " + std::to_string(distinct.size()) + " (want 12), circles K4 " + std::to_string(c4) +
              " (3), K6 " + std::to_string(c6) + " (60), K7 " + std::to_string(c7) + " (360)";
  return o;
}

}  // namespace
}  // namespace dsign

int main() {
  using namespace dsign;
  report(1, "K4 exhaustive suite", k4_suite());
  report(2, "group identities", group_suite());
  report(3, "main-theorem sweep at n = 6", sweep_six());
  report(4, "solver soundness and completeness at n = 6", solver_six());
  report(5, "randomized suite at n = 7", random_seven());
  report(6, "switching invariance", switching_invariance());
  report(7, "count fixtures", count_fixtures());
  std::printf("%s: %d of 7 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
