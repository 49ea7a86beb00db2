#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rep3/error.hpp"
#include "rep3/feasible.hpp"
#include "rep3/graph.hpp"
#include "rep3/harness.hpp"
#include "rep3/repetition.hpp"
#include "rep3/solver.hpp"

namespace rep3 {

using Json = nlohmann::ordered_json;

// Edge-list JSON: {"n": 4, "edges": [[0,1],[1,2],[2,3]]}, 0-based.

inline Json edge_list_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_edge_list_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::MalformedRecord, "edge entries must be [u, v] pairs");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, std::string("edge-list JSON: ") + e.what());
  }
}

inline Graph graph_from_edge_list_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, std::string("edge-list JSON: ") + e.what());
  }
  return graph_from_edge_list_json(j);
}

inline Json vertex_list_json(VertexSet s) { return Json(s.to_vector()); }

inline Json to_json(const TripleClassification& tc) {
  Json j;
  j["condition"] = tc.condition ? Json(to_string(*tc.condition)) : Json(nullptr);
  j["labeling"] = tc.labeling ? Json(*tc.labeling) : Json(nullptr);
  j["p"] = tc.p;
  j["q"] = tc.q;
  return j;
}

inline Json to_json(const DeletionCertificate& c) {
  return Json{{"n", c.original_order},
              {"deleted", vertex_list_json(c.deleted)},
              {"witness", c.witness},
              {"degree", c.witness_degree}};
}

inline DeletionCertificate certificate_from_json(const Json& j) {
  try {
    DeletionCertificate c;
    c.original_order = j.at("n").get<int>();
    for (int v : j.at("deleted").get<std::vector<int>>()) {
      if (v < 0 || v >= kMaxOrder) throw Error(ErrorCode::MalformedRecord, "deleted vertex out of range");
      c.deleted.insert(v);
    }
    const auto w = j.at("witness").get<std::vector<int>>();
    if (w.size() != 3) throw Error(ErrorCode::MalformedRecord, "witness must list 3 vertices");
    c.witness = {w[0], w[1], w[2]};
    c.witness_degree = j.at("degree").get<int>();
    return c;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedRecord, std::string("certificate JSON: ") + e.what());
  }
}

inline Json to_json(const DegreeProfile& p) {
  Json hist = Json::object();
  for (const auto& [d, m] : p.histogram) hist[std::to_string(d)] = m;
  return Json{{"histogram", std::move(hist)}, {"rep", p.rep}, {"s_set", p.s_set}, {"t_set", p.t_set}};
}

inline Json to_json(const ViolationLog& log) {
  return Json{{"count", log.count}, {"examples", log.examples}};
}

inline Json to_json(const VerificationReport& r, bool include_elapsed = true) {
  Json per_n = Json::object();
  for (const auto& [n, s] : r.per_n) {
    Json e{{"graph_count", s.graph_count}};
    if (r.has_histogram) {
      e["min_deletion_histogram"] = s.min_deletion_histogram;
      e["violations"] = to_json(s.violations);
      e["extremal_witnesses"] = s.extremal_witnesses;
    }
    per_n[std::to_string(n)] = std::move(e);
  }
  Json lemmas = Json::object();
  for (const auto& [id, l] : r.lemma_results) {
    Json e{{"instances_checked", l.instances_checked}, {"violations", to_json(l.violations)}};
    if (id == kFeasibleBudgetSuite) {
      e["strong_form_failures"] = l.strong_form_failures;
      e["strong_form_examples"] = l.strong_form_examples;
    }
    lemmas[id] = std::move(e);
  }
  Json j{{"status", r.verified() ? "verified" : "violations"}, {"per_n", std::move(per_n)}};
  if (!r.lemma_results.empty()) j["lemma_results"] = std::move(lemmas);
  if (include_elapsed) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

/// Plain-text rendering for terminals.
inline std::string to_table(const VerificationReport& r) {
  std::ostringstream os;
  if (!r.per_n.empty()) {
    os << std::left << std::setw(4) << "n" << std::right << std::setw(10) << "graphs";
    if (r.has_histogram) {
      for (int k = 0; k < 4; ++k) os << std::setw(9) << ("del=" + std::to_string(k));
      os << std::setw(12) << "violations";
    }
    os << '\n';
    for (const auto& [n, s] : r.per_n) {
      os << std::left << std::setw(4) << n << std::right << std::setw(10) << s.graph_count;
      if (r.has_histogram) {
        for (auto h : s.min_deletion_histogram) os << std::setw(9) << h;
        os << std::setw(12) << s.violations.count;
      }
      os << '\n';
    }
  }
  if (!r.lemma_results.empty()) {
    os << '\n' << std::left << std::setw(20) << "suite" << std::right << std::setw(12) << "instances"
       << std::setw(12) << "violations" << std::setw(14) << "strong-fails" << '\n';
    for (const auto& [id, l] : r.lemma_results) {
      os << std::left << std::setw(20) << id << std::right << std::setw(12) << l.instances_checked
         << std::setw(12) << l.violations.count << std::setw(14);
      if (id == kFeasibleBudgetSuite) {
        os << l.strong_form_failures;
      } else {
        os << "-";
      }
      os << '\n';
    }
  }
  for (const auto& [n, s] : r.per_n) {
    for (const auto& v : s.violations.examples) os << "violation: " << v << '\n';
  }
  for (const auto& [id, l] : r.lemma_results) {
    for (const auto& v : l.violations.examples) os << "violation [" << id << "]: " << v << '\n';
  }
  os << "status: " << (r.verified() ? "verified" : "violations") << "  elapsed: " << std::fixed
     << std::setprecision(2) << r.elapsed_seconds << "s\n";
  return os.str();
}

}  // namespace rep3
