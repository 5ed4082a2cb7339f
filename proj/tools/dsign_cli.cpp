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

// dsign: generate, inspect, solve and verify doubly signed complete graphs.
//
// Exit codes: 0 success, 1 a violation or counterexample candidate, 2 usage
// or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dsign/dsign.hpp"

namespace {

using dsign::InstanceRecord;
using dsign::SignedCompleteGraph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct InstanceSource {
  std::string in;
  std::string named;
  std::optional<int> random_n;
  std::optional<int> normalized_n;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::optional<int> normalize_vertex;

  void attach(CLI::App* cmd) {
    auto* in_opt = cmd->add_option("--in", in, "Instance file (line or JSON format; - for stdin)");
    auto* named_opt = cmd->add_option("--named", named, "share_vertex_k4, triangle_k4 or identity(N)");
    auto* random_opt = cmd->add_option("--random", random_n, "Random labeling of K_N")->check(CLI::Range(3, 64));
    auto* norm_opt = cmd->add_option("--normalized", normalized_n, "Normalized labeling of K_N (with --index)")
                         ->check(CLI::Range(4, 7));
    cmd->add_option("--seed", seed, "Seed for --random");
    cmd->add_option("--index", index, "Index for --normalized");
    cmd->add_option("--normalize", normalize_vertex, "Switch so every edge at this vertex is e");
    in_opt->excludes(named_opt, random_opt, norm_opt);
    named_opt->excludes(random_opt, norm_opt);
    random_opt->excludes(norm_opt);
  }

  InstanceRecord load() const {
    InstanceRecord r;
    if (!in.empty()) {
      std::stringstream buf;
      if (in == "-") {
        buf << std::cin.rdbuf();
      } else {
        std::ifstream f(in);
        if (!f) throw dsign::Error("cannot open " + in);
        buf << f.rdbuf();
      }
      r = dsign::parse_any(buf.str());
    } else if (!named.empty()) {
      r.graph = dsign::named_instance(named);
      r.name = named;
      r.generator = "named";
    } else if (random_n) {
      r.graph = dsign::gen_random(*random_n, seed);
      r.seed = seed;
      r.generator = "random";
    } else if (normalized_n) {
      r.graph = dsign::NormalizedLabelings(*normalized_n).at(index);
      r.name = "normalized(" + std::to_string(*normalized_n) + ")#" + std::to_string(index);
      r.generator = "exhaustive_normalized";
    } else {
      throw dsign::Error("no instance: pass --in, --named, --random or --normalized");
    }
    if (normalize_vertex) r.graph = dsign::normalize_at(r.graph, *normalize_vertex).graph;
    return r;
  }
};

std::string instance_label(const InstanceRecord& r) {
  std::string s = "K" + std::to_string(r.graph.order());
  if (r.name) s += " " + *r.name;
  if (r.seed) s += " seed=" + std::to_string(*r.seed);
  return s;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct GenArgs {
  std::optional<int> exhaustive_n;
  std::optional<int> random_n;
  std::string named;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> index;
  std::optional<std::uint64_t> count;
  std::string out;
  bool json = false;
};

int run_gen(const GenArgs& a) {
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw dsign::Error("cannot write " + a.out);
  }
  std::ostream& os = a.out.empty() ? std::cout : file;
  auto emit = [&](const InstanceRecord& r, bool first) {
    if (a.json) {
      os << dsign::to_json(r).dump() << '\n';
    } else {
      if (!first) os << '\n';
      os << dsign::serialize(r);
    }
  };
  if (a.exhaustive_n) {
    const dsign::NormalizedLabelings all(*a.exhaustive_n);
    const std::uint64_t begin = a.index.value_or(0);
    const std::uint64_t end =
        a.index ? begin + a.count.value_or(1) : std::min<std::uint64_t>(all.size(), begin + a.count.value_or(all.size()));
    if (end > all.size() || begin >= end) throw dsign::Error("index range outside 0.." + std::to_string(all.size() - 1));
    for (std::uint64_t i = begin; i < end; ++i) {
      InstanceRecord r;
      r.graph = all.at(i);
      r.name = "normalized(" + std::to_string(*a.exhaustive_n) + ")#" + std::to_string(i);
      r.generator = "exhaustive_normalized";
      emit(r, i == begin);
    }
    return kExitOk;
  }
  if (a.random_n) {
    const std::uint64_t n = a.count.value_or(1);
    for (std::uint64_t i = 0; i < n; ++i) {
      InstanceRecord r;
      r.seed = n == 1 ? a.seed : dsign::derive_seed(a.seed, i);
      r.graph = dsign::gen_random(*a.random_n, *r.seed);
      r.generator = "random";
      emit(r, i == 0);
    }
    return kExitOk;
  }
  InstanceRecord r;
  r.graph = dsign::named_instance(a.named);
  r.name = a.named;
  r.generator = "named";
  emit(r, true);
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_census(const InstanceSource& src, bool as_json) {
  const InstanceRecord r = src.load();
  const dsign::TriangleCensus c = dsign::triangle_census(r.graph);
  const dsign::K4Summary k = dsign::summarize_k4s(r.graph);
  const auto sigma4 = dsign::find_sigma4_star(r.graph);
  const dsign::SpectrumPrediction p = r.graph.order() >= 3 ? dsign::predict_spectrum(r.graph)
                                                           : dsign::SpectrumPrediction{};
  if (as_json) {
    json j{{"n", r.graph.order()},
           {"triangle_counts", dsign::sign_counts_json(c.counts)},
           {"diversity", c.diversity()},
           {"triangle_signs", dsign::sign_set_json(c.signs())},
           {"k4", {{"total", k.total},
                   {"two_two", k.two_two},
                   {"all_distinct", k.all_distinct},
                   {"triple_star", k.triple_star},
                   {"triple_triangle", k.triple_triangle}}}};
    if (sigma4) j["first_all_distinct_k4"] = *sigma4;
    if (r.graph.order() >= 3) j["prediction"] = dsign::to_json(p);
    print_json(j);
    return kExitOk;
  }
  std::cout << "instance: " << instance_label(r) << '\n'
            << "triangles: " << c.counts.to_string() << '\n'
            << "diversity: " << c.diversity() << ' ' << c.signs().to_string() << '\n'
            << "K4s: " << k.total << " (" << k.two_two << " paired, " << k.all_distinct << " all-distinct: "
            << k.triple_star << " with a star triple, " << k.triple_triangle << " with a triangle triple)\n";
  if (sigma4) {
    std::cout << "first all-distinct K4: " << (*sigma4)[0] << ' ' << (*sigma4)[1] << ' ' << (*sigma4)[2] << ' '
              << (*sigma4)[3] << '\n';
  }
  if (r.graph.order() >= 3) {
    std::cout << "prediction: " << to_string(p.kind) << ' ' << p.allowed.to_string() << " (" << p.provenance
              << ")\n";
  }
  return kExitOk;
}

int run_spectrum(const InstanceSource& src, bool witness, int bound, int jobs, bool as_json) {
  const InstanceRecord r = src.load();
  const dsign::Spectrum s = dsign::hamiltonian_spectrum(r.graph, bound, jobs);
  if (as_json) {
    print_json(dsign::to_json(s, witness));
    return kExitOk;
  }
  std::cout << "instance: " << instance_label(r) << '\n'
            << "circles: " << s.total() << '\n'
            << "counts: " << s.counts.to_string() << '\n'
            << "realized: " << s.realized().to_string() << '\n';
  if (witness) {
    for (dsign::F22 x : dsign::kAllElements) {
      if (s.witness(x)) std::cout << "  " << x << ": " << s.witness(x)->to_string() << '\n';
    }
  }
  return kExitOk;
}

int run_construct(const InstanceSource& src, bool trace, bool as_json) {
  const InstanceRecord r = src.load();
  const dsign::ConstructionOutcome o = dsign::construct_witnesses(r.graph);
  const int code = o.status == dsign::ConstructionStatus::kCounterexampleCandidate ? kExitViolation : kExitOk;
  if (as_json) {
    print_json(dsign::to_json(o));
    return code;
  }
  std::cout << "instance: " << instance_label(r) << '\n'
            << "status: " << to_string(o.status) << '\n'
            << "prediction: " << to_string(o.prediction.kind) << ' ' << o.prediction.allowed.to_string() << '\n';
  if (!o.detail.empty()) std::cout << "detail: " << o.detail << '\n';
  if (o.witnesses) {
    for (const dsign::Witness& w : o.witnesses->witnesses) {
      std::cout << "  " << w.sign << ": " << w.circle.to_string() << '\n';
    }
    if (trace) {
      std::cout << "trace: " << o.witnesses->trace_string() << '\n'
                << "search-backed: " << (o.witnesses->search_backed ? "yes" : "no") << '\n';
    }
  }
  return code;
}

struct VerifyArgs {
  std::string lemma;
  std::string scope;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  bool force = false;
  bool list = false;
};

int run_verify(const VerifyArgs& a, bool as_json) {
  if (a.list) {
    for (const auto& s : dsign::lab::registry()) std::cout << s.id << ": " << s.claim << '\n';
    return kExitOk;
  }
  if (a.lemma.empty() || a.scope.empty()) throw dsign::Error("verify needs --lemma and --scope (or --list)");
  dsign::lab::Scope scope = dsign::lab::parse_scope(a.scope);
  if (a.seed) {
    if (scope.kind != dsign::lab::ScopeKind::kRandom) throw dsign::Error("--seed applies to random scopes only");
    scope.seed = *a.seed;
  }
  const dsign::lab::VerificationReport r =
      dsign::lab::verify(a.lemma, scope, {.jobs = a.jobs, .force = a.force});
  if (as_json) {
    print_json(dsign::to_json(r));
  } else {
    std::cout << r.id << " on " << r.scope << ": " << (r.pass() ? "PASS" : "FAIL") << '\n'
              << "  claim: " << r.claim << '\n'
              << "  domain: " << r.domain << '\n'
              << "  scanned " << r.scanned << " of " << r.domain_size << ", " << r.qualifying << " qualifying, "
              << r.violation_count << " violations\n";
    if (!r.stats.empty()) {
      std::cout << "  stats:";
      for (const auto& [k, v] : r.stats) std::cout << ' ' << k << '=' << v;
      std::cout << '\n';
    }
    for (const auto& v : r.violations) std::cout << "  violation at index " << v.index << ": " << v.message << '\n';
    std::cout << "  elapsed " << r.elapsed_seconds << " s, jobs " << r.jobs << '\n';
  }
  return r.pass() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double signs of Hamiltonian circles in doubly signed complete graphs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  auto* ex_opt = gen_cmd->add_option("--exhaustive-normalized", gen.exhaustive_n, "Every normalized labeling of K_N")
                     ->check(CLI::Range(4, 7));
  auto* rnd_opt = gen_cmd->add_option("--random", gen.random_n, "Random labeling of K_N")->check(CLI::Range(3, 64));
  auto* nam_opt = gen_cmd->add_option("--named", gen.named, "share_vertex_k4, triangle_k4 or identity(N)");
  gen_cmd->add_option("--seed", gen.seed, "Seed for --random");
  gen_cmd->add_option("--index", gen.index, "First index of an exhaustive stream");
  gen_cmd->add_option("--count", gen.count, "Number of instances");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_flag("--json", as_json, "One JSON object per line");
  ex_opt->excludes(rnd_opt, nam_opt);
  rnd_opt->excludes(nam_opt);

  InstanceSource census_src, spectrum_src, construct_src;
  auto* census_cmd = app.add_subcommand("census", "Triangle-sign census and K4 classification");
  census_src.attach(census_cmd);
  census_cmd->add_flag("--json", as_json, "JSON output");

  bool witness = false;
  int bound = dsign::kDefaultEnumerationBound;
  int jobs = 1;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Hamiltonian circle signs by enumeration");
  spectrum_src.attach(spectrum_cmd);
  spectrum_cmd->add_flag("--witness", witness, "Print one canonical circle per realized sign");
  spectrum_cmd->add_option("--bound", bound, "Largest n to enumerate");
  spectrum_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  spectrum_cmd->add_flag("--json", as_json, "JSON output");

  bool trace = false;
  auto* construct_cmd = app.add_subcommand("construct", "Witness circles for every sign");
  construct_src.attach(construct_cmd);
  construct_cmd->add_flag("--trace", trace, "Print the case path taken");
  construct_cmd->add_flag("--json", as_json, "JSON output");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a structural claim over a finite domain");
  verify_cmd->add_option("--lemma", verify.lemma, "Claim id (see --list)");
  verify_cmd->add_option("--scope", verify.scope,
                         "exhaustive_k4, exhaustive_group, exhaustive_normalized(N) or random(N,COUNT[,SEED])");
  verify_cmd->add_option("--seed", verify.seed, "Override the seed of a random scope");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--force", verify.force, "Allow exhaustive domains above the size cap");
  verify_cmd->add_flag("--list", verify.list, "List claim ids");
  verify_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) {
      if (!gen.exhaustive_n && !gen.random_n && gen.named.empty()) {
        throw dsign::Error("gen needs --exhaustive-normalized, --random or --named");
      }
      gen.json = as_json;
      return run_gen(gen);
    }
    if (*census_cmd) return run_census(census_src, as_json);
    if (*spectrum_cmd) return run_spectrum(spectrum_src, witness, bound, jobs, as_json);
    if (*construct_cmd) return run_construct(construct_src, trace, as_json);
    if (*verify_cmd) return run_verify(verify, as_json);
  } catch (const dsign::ParseError& e) {
    std::cerr << "dsign: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "dsign: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dsign::Error& e) {
    std::cerr << "dsign: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
