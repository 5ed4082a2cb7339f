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

// Instance records in a line format and a JSON format, plus JSON views of
// spectra, predictions, witness sets and verification reports.
//
// Line format:
//
//   # name=share_vertex_k4
//   n=4
//   1 2 b
//   1 3 c
//   ...
//
// Comment lines of the form `# key=value` carry metadata (name, seed,
// generator); other comments and blank lines are ignored.

#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dsign/graph.hpp"
#include "dsign/lemma_lab.hpp"
#include "dsign/oracle.hpp"
#include "dsign/solver.hpp"

namespace dsign {

struct InstanceRecord {
  SignedCompleteGraph graph{1};
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> generator;

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

inline std::string serialize(const InstanceRecord& r) {
  std::ostringstream os;
  if (r.name) os << "# name=" << *r.name << '\n';
  if (r.seed) os << "# seed=" << *r.seed << '\n';
  if (r.generator) os << "# generator=" << *r.generator << '\n';
  os << "n=" << r.graph.order() << '\n';
  for (const SignedEdge& e : r.graph.signed_edges()) {
    os << e.u << ' ' << e.v << ' ' << e.sign << '\n';
  }
  return os.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline InstanceRecord parse_instance(std::string_view text) {
  InstanceRecord r;
  std::optional<int> n;
  std::vector<SignedEdge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = detail::trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;
      const std::string_view key = detail::trim(body.substr(0, eq));
      const std::string_view value = detail::trim(body.substr(eq + 1));
      if (key == "name") {
        r.name = std::string(value);
      } else if (key == "generator") {
        r.generator = std::string(value);
      } else if (key == "seed") {
        std::uint64_t s = 0;
        if (!detail::parse_int(value, s)) throw ParseError(line_no, "bad seed \"" + std::string(value) + "\"");
        r.seed = s;
      }
      continue;
    }
    if (line.starts_with("n=")) {
      if (n) throw ParseError(line_no, "repeated header");
      int value = 0;
      if (!detail::parse_int(detail::trim(line.substr(2)), value) || value < 1) {
        throw ParseError(line_no, "bad header \"" + std::string(line) + "\"");
      }
      n = value;
      continue;
    }
    if (!n) throw ParseError(line_no, "edge line before the n=<N> header");
    const auto tokens = detail::split_ws(line);
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected \"u v sign\", got \"" + std::string(line) + "\"");
    }
    SignedEdge e;
    if (!detail::parse_int(tokens[0], e.u) || !detail::parse_int(tokens[1], e.v)) {
      throw ParseError(line_no, "bad vertex in \"" + std::string(line) + "\"");
    }
    try {
      e.sign = parse_f22(tokens[2]);
    } catch (const Error& err) {
      throw ParseError(line_no, err.what());
    }
    if (e.u < 1 || e.u > *n || e.v < 1 || e.v > *n || e.u == e.v) {
      throw ParseError(line_no, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " is not a pair of distinct vertices in 1.." + std::to_string(*n));
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (Edge(edges[k].u, edges[k].v) == Edge(e.u, e.v)) {
        throw ParseError(line_no, "duplicate edge " + to_string(Edge(e.u, e.v)) + " (first on line " +
                                      std::to_string(edge_lines[k]) + ")");
      }
    }
    edges.push_back(e);
    edge_lines.push_back(line_no);
  }
  if (!n) throw ParseError(0, "missing n=<N> header");
  try {
    r.graph = SignedCompleteGraph::build(*n, edges);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(0, err.what());
  }
  return r;
}

inline nlohmann::json to_json(const InstanceRecord& r) {
  nlohmann::json j;
  j["n"] = r.graph.order();
  nlohmann::json edges = nlohmann::json::array();
  for (const SignedEdge& e : r.graph.signed_edges()) {
    edges.push_back({e.u, e.v, to_string(e.sign)});
  }
  j["edges"] = std::move(edges);
  if (r.name) j["name"] = *r.name;
  if (r.seed) j["seed"] = *r.seed;
  if (r.generator) j["generator"] = *r.generator;
  return j;
}

inline InstanceRecord instance_from_json(const nlohmann::json& j) {
  try {
    InstanceRecord r;
    const int n = j.at("n").get<int>();
    std::vector<SignedEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw Error("each edge must be [u, v, \"sign\"]");
      edges.push_back({e[0].get<int>(), e[1].get<int>(), parse_f22(e[2].get<std::string>())});
    }
    r.graph = SignedCompleteGraph::build(n, edges);
    if (j.contains("name")) r.name = j["name"].get<std::string>();
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("generator")) r.generator = j["generator"].get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad instance JSON: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

/// Accepts either format; JSON when the first non-blank character is '{'.
inline InstanceRecord parse_any(std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("bad instance JSON: ") + e.what());
    }
    return instance_from_json(j);
  }
  return parse_instance(text);
}

inline nlohmann::json sign_counts_json(const SignCounts& c) {
  nlohmann::json j = nlohmann::json::object();
  for (F22 s : kAllElements) j[to_string(s)] = c.count(s);
  return j;
}

inline nlohmann::json sign_set_json(SignSet s) {
  nlohmann::json j = nlohmann::json::array();
  for (F22 x : kAllElements) {
    if (s.contains(x)) j.push_back(to_string(x));
  }
  return j;
}

inline nlohmann::json to_json(const Circle& c) {
  return nlohmann::json(std::vector<Vertex>(c.vertices().begin(), c.vertices().end()));
}

inline nlohmann::json to_json(const Spectrum& s, bool with_witnesses) {
  nlohmann::json j;
  j["n"] = s.order;
  j["circles"] = s.total();
  j["counts"] = sign_counts_json(s.counts);
  j["realized"] = sign_set_json(s.realized());
  if (with_witnesses) {
    nlohmann::json w = nlohmann::json::object();
    for (F22 x : kAllElements) {
      if (s.witness(x)) w[to_string(x)] = to_json(*s.witness(x));
    }
    j["witnesses"] = std::move(w);
  }
  return j;
}

inline nlohmann::json to_json(const SpectrumPrediction& p) {
  return {{"kind", to_string(p.kind)},
          {"allowed", sign_set_json(p.allowed)},
          {"diversity", p.diversity},
          {"provenance", p.provenance}};
}

inline nlohmann::json to_json(const WitnessSet& ws) {
  nlohmann::json list = nlohmann::json::array();
  for (const Witness& w : ws.witnesses) {
    list.push_back({{"circle", to_json(w.circle)}, {"sign", to_string(w.sign)}});
  }
  return {{"witnesses", std::move(list)}, {"trace", ws.trace}, {"search_backed", ws.search_backed}};
}

inline nlohmann::json to_json(const ConstructionOutcome& o) {
  nlohmann::json j;
  j["status"] = to_string(o.status);
  j["prediction"] = to_json(o.prediction);
  if (o.witnesses) j["witness_set"] = to_json(*o.witnesses);
  if (!o.detail.empty()) j["detail"] = o.detail;
  return j;
}

inline nlohmann::json to_json(const lab::VerificationReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const lab::Violation& v : r.violations) {
    violations.push_back({{"index", v.index}, {"message", v.message}});
  }
  nlohmann::json j{{"id", r.id},
                   {"claim", r.claim},
                   {"scope", r.scope},
                   {"domain", r.domain},
                   {"domain_size", r.domain_size},
                   {"scanned", r.scanned},
                   {"qualifying", r.qualifying},
                   {"stats", r.stats},
                   {"violation_count", r.violation_count},
                   {"violations", std::move(violations)},
                   {"elapsed_seconds", r.elapsed_seconds},
                   {"jobs", r.jobs},
                   {"pass", r.pass()}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

}  // namespace dsign
