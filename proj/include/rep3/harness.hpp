#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rep3/combinations.hpp"
#include "rep3/enumerate.hpp"
#include "rep3/error.hpp"
#include "rep3/feasible.hpp"
#include "rep3/graph.hpp"
#include "rep3/graph6.hpp"
#include "rep3/parallel.hpp"
#include "rep3/repetition.hpp"
#include "rep3/solver.hpp"

namespace rep3 {

/// Number of graphs on n vertices up to isomorphism, n = 0..9.
inline constexpr std::array<std::size_t, 10> kPublishedClassCounts = {
    1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};

// Suite identifiers used as keys in VerificationReport::lemma_results.
inline constexpr const char* kFeasibleBudgetSuite = "feasible_budget";
inline constexpr const char* kFourSetPathSuite = "four_set_path";
inline constexpr const char* kFiveSetMedianSuite = "five_set_median";
inline constexpr const char* kBalancedGapSuite = "balanced_gap_pair";
inline constexpr const char* kCountingIdentitySuite = "counting_identity";

/// Violation messages kept per bucket; the counts are always exact.
inline constexpr std::size_t kMaxRecordedViolations = 100;

struct ViolationLog {
  std::size_t count = 0;
  std::vector<std::string> examples;

  void add(std::string what) {
    ++count;
    if (examples.size() < kMaxRecordedViolations) examples.push_back(std::move(what));
  }
  void merge(const ViolationLog& other) {
    for (const auto& e : other.examples) {
      if (examples.size() < kMaxRecordedViolations) examples.push_back(e);
    }
    count += other.count;
  }
  friend bool operator==(const ViolationLog&, const ViolationLog&) = default;
};

struct OrderSummary {
  std::size_t graph_count = 0;
  std::array<std::size_t, 4> min_deletion_histogram{};
  ViolationLog violations;
  std::vector<std::string> extremal_witnesses;  // graph6, minimum deletion = 3
  friend bool operator==(const OrderSummary&, const OrderSummary&) = default;
};

struct LemmaResult {
  std::size_t instances_checked = 0;
  ViolationLog violations;
  std::size_t strong_form_failures = 0;  // feasible_budget only
  std::vector<std::string> strong_form_examples;

  void merge(const LemmaResult& o) {
    instances_checked += o.instances_checked;
    violations.merge(o.violations);
    strong_form_failures += o.strong_form_failures;
    for (const auto& e : o.strong_form_examples) {
      if (strong_form_examples.size() < kMaxRecordedViolations) strong_form_examples.push_back(e);
    }
  }
  friend bool operator==(const LemmaResult&, const LemmaResult&) = default;
};

struct VerificationReport {
  bool has_histogram = false;
  std::map<int, OrderSummary> per_n;
  std::map<std::string, LemmaResult> lemma_results;
  double elapsed_seconds = 0.0;

  std::size_t violation_count() const {
    std::size_t total = 0;
    for (const auto& [n, s] : per_n) total += s.violations.count;
    for (const auto& [id, r] : lemma_results) total += r.violations.count;
    return total;
  }
  bool verified() const { return violation_count() == 0; }

  /// Equality ignoring elapsed time.
  bool same_results(const VerificationReport& o) const {
    return has_histogram == o.has_histogram && per_n == o.per_n && lemma_results == o.lemma_results;
  }
};

namespace detail {

using GraphSource = std::function<Graph(std::size_t)>;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string describe(const Graph& g, VertexSet s) {
  std::string out = write_graph6(g) + " {";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

struct TheoremOutcome {
  int deletions = -1;
  std::string violation;
  std::string graph6;
};

inline TheoremOutcome check_theorem_on(const Graph& g) {
  TheoremOutcome out;
  out.graph6 = write_graph6(g);
  try {
    const DeletionCertificate cert = solve3(g);
    out.deletions = cert.deleted.size();
    if (!check_certificate(g, cert)) {
      out.violation = out.graph6 + ": certificate failed independent check";
      return out;
    }
    const int oracle = min_deletion_size(g, std::min(3, g.order() - 3));
    if (oracle != out.deletions) {
      out.violation = out.graph6 + ": solver size " + std::to_string(out.deletions) +
                      " differs from oracle size " + std::to_string(oracle);
    }
  } catch (const Error& e) {
    out.violation = out.graph6 + ": " + e.what();
  }
  return out;
}

inline OrderSummary summarise_theorem(std::size_t count, const GraphSource& source, int jobs) {
  const auto outcomes = parallel_map<TheoremOutcome>(count, jobs, [&](std::size_t i) {
    return check_theorem_on(source(i));
  });
  OrderSummary s;
  s.graph_count = count;
  for (const auto& o : outcomes) {
    if (!o.violation.empty()) s.violations.add(o.violation);
    if (o.deletions >= 0) ++s.min_deletion_histogram[o.deletions];
    if (o.deletions == 3) s.extremal_witnesses.push_back(o.graph6);
  }
  return s;
}

inline void check_theorem_range(int min_n, int max_n) {
  if (min_n < 5 || max_n > kMaxEnumerationOrder || min_n > max_n) {
    throw Error(ErrorCode::OrderOutOfRange, "theorem range must satisfy 5 <= min_n <= max_n <= 9");
  }
}

}  // namespace detail

/// Runs solve3, the certificate check and the oracle on every graph of
/// order min_n..max_n produced by the enumerator.
inline VerificationReport verify_theorem(int min_n, int max_n, int jobs = 1) {
  detail::check_theorem_range(min_n, max_n);
  const detail::Stopwatch clock;
  VerificationReport report;
  report.has_histogram = true;
  for (int n = min_n; n <= max_n; ++n) {
    const GraphCatalogue cat = enumerate_graphs(n);
    OrderSummary s = detail::summarise_theorem(cat.size(), [&](std::size_t i) { return cat[i]; }, jobs);
    if (cat.size() != kPublishedClassCounts[n]) {
      s.violations.add("n=" + std::to_string(n) + ": enumerated " + std::to_string(cat.size()) +
                       " classes, expected " + std::to_string(kPublishedClassCounts[n]));
    }
    report.per_n[n] = std::move(s);
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Same as above over an external catalogue. Graphs whose order lies
/// outside [min_n, max_n] are ignored.
inline VerificationReport verify_theorem(std::span<const Graph> graphs, int min_n, int max_n, int jobs = 1) {
  detail::check_theorem_range(min_n, max_n);
  const detail::Stopwatch clock;
  VerificationReport report;
  report.has_histogram = true;
  for (int n = min_n; n <= max_n; ++n) {
    std::vector<Graph> bucket;
    for (const Graph& g : graphs) {
      if (g.order() == n) bucket.push_back(g);
    }
    report.per_n[n] = detail::summarise_theorem(bucket.size(), [&](std::size_t i) { return bucket[i]; }, jobs);
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

namespace detail {

struct LemmaOutcome {
  std::map<std::string, LemmaResult> results;
};

inline LemmaOutcome check_lemmas_on(const Graph& g) {
  LemmaOutcome out;
  auto& budget_suite = out.results[kFeasibleBudgetSuite];
  auto& four_suite = out.results[kFourSetPathSuite];
  auto& five_suite = out.results[kFiveSetMedianSuite];
  auto& gap_suite = out.results[kBalancedGapSuite];
  const int n = g.order();
  if (n < 3) return out;

  // Minimum deletion size with the widest legal budget; -1 when none.
  const int min_del = min_deletion_size(g, n - 3);

  for_each_combination(g.vertices(), 3, [&](VertexSet s) {
    const auto t3 = s.to_vector();
    const Triple t{t3[0], t3[1], t3[2]};
    const TripleClassification tc = classify_triple(g, t);
    if (!tc.feasible()) return false;
    const int b = budget(tc);
    if (b > n - 3) return false;
    ++budget_suite.instances_checked;
    if (min_del < 0 || min_del > b) {
      budget_suite.violations.add(describe(g, s) + ": no " + std::to_string(b) + "-deletion gives rep >= 3");
    }
    if (!equalize_triple(g, t, b)) {
      ++budget_suite.strong_form_failures;
      if (budget_suite.strong_form_examples.size() < kMaxRecordedViolations) {
        budget_suite.strong_form_examples.push_back(describe(g, s));
      }
    }
    return false;
  });

  for_each_combination(g.vertices(), 4, [&](VertexSet s) {
    const auto v = s.to_vector();
    const FourSetResult r = p4_structure(g, v);
    ++four_suite.instances_checked;
    if (r.verdict == FourSetVerdict::Violation) four_suite.violations.add(describe(g, s) + ": Violation");

    std::array<int, 4> d{};
    for (int i = 0; i < 4; ++i) d[i] = g.degree(v[i]);
    std::sort(d.begin(), d.end());
    const bool pattern = d[0] >= 1 && d[0] == d[1] && d[2] == d[3] && d[2] == d[0] + 2;
    if (pattern && r.verdict == FourSetVerdict::HasBalanceable) {
      ++gap_suite.instances_checked;
      if (min_del < 0 || min_del > std::min(3, n - 3)) {
        gap_suite.violations.add(describe(g, s) + ": needs more than 3 deletions");
      }
    }
    return false;
  });

  for_each_combination(g.vertices(), 5, [&](VertexSet s) {
    ++five_suite.instances_checked;
    try {
      find_feasible_in_five(g, s.to_vector());
    } catch (const Error& e) {
      five_suite.violations.add(describe(g, s) + ": " + e.what());
    }
    return false;
  });
  return out;
}

}  // namespace detail

/// Exhaustive check of the four structural lemmas over every graph with at
/// most max_n vertices:
///  - feasible_budget: each feasible triple with budget b <= n-3 leaves three
///    equal degrees after <= b deletions (asserted); whether the triple
///    itself can be equalised within b is recorded as strong_form_failures.
///  - four_set_path: no 4-set gets a Violation verdict from p4_structure.
///  - five_set_median: every 5-set has a feasible triple through its median.
///  - balanced_gap_pair: 4-sets with degrees (d, d, d+2, d+2), d >= 1, that
///    contain a balanceable triple allow <= 3 deletions.
inline VerificationReport verify_lemmas(int max_n, int jobs = 1) {
  if (max_n < 1 || max_n > 8) throw Error(ErrorCode::OrderOutOfRange, "lemma suites support 1 <= max_n <= 8");
  const detail::Stopwatch clock;
  VerificationReport report;
  for (const char* id : {kFeasibleBudgetSuite, kFourSetPathSuite, kFiveSetMedianSuite, kBalancedGapSuite}) {
    report.lemma_results[id];
  }
  for (int n = 1; n <= max_n; ++n) {
    const GraphCatalogue cat = enumerate_graphs(n);
    const auto outcomes = parallel_map<detail::LemmaOutcome>(cat.size(), jobs, [&](std::size_t i) {
      return detail::check_lemmas_on(cat[i]);
    });
    for (const auto& o : outcomes) {
      for (const auto& [id, r] : o.results) report.lemma_results[id].merge(r);
    }
    report.per_n[n].graph_count = cat.size();
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// Degrees 1..n-1 split into those held by exactly two vertices (S) and by
/// none (T). When no degree repeats three times and there is no isolated
/// vertex, |T| = |S| - 1.
inline VerificationReport counting_identity_suite(int max_n, int jobs = 1) {
  if (max_n < 1 || max_n > 8) throw Error(ErrorCode::OrderOutOfRange, "identity suite supports 1 <= max_n <= 8");
  const detail::Stopwatch clock;
  VerificationReport report;
  auto& suite = report.lemma_results[kCountingIdentitySuite];
  for (int n = 1; n <= max_n; ++n) {
    const GraphCatalogue cat = enumerate_graphs(n);
    const auto outcomes = parallel_map<LemmaResult>(cat.size(), jobs, [&](std::size_t i) {
      LemmaResult r;
      const Graph g = cat[i];
      const DegreeProfile p = profile(g);
      if (p.rep > 2 || p.histogram.contains(0)) return r;
      ++r.instances_checked;
      if (p.t_set.size() + 1 != p.s_set.size()) {
        r.violations.add(write_graph6(g) + ": |S|=" + std::to_string(p.s_set.size()) +
                         " |T|=" + std::to_string(p.t_set.size()));
      }
      return r;
    });
    for (const auto& r : outcomes) suite.merge(r);
    report.per_n[n].graph_count = cat.size();
  }
  report.elapsed_seconds = clock.seconds();
  return report;
}

/// graph6 strings of every class of order n whose minimum deletion size is
/// min(3, n-3) and at least 3.
inline std::vector<std::string> find_extremal(int n, int jobs = 1) {
  if (n < 5 || n > kMaxEnumerationOrder) throw Error(ErrorCode::OrderOutOfRange, "extremal search supports 5 <= n <= 9");
  const int target = std::min(3, n - 3);
  if (target < 3) return {};
  const GraphCatalogue cat = enumerate_graphs(n);
  const auto hits = parallel_map<std::string>(cat.size(), jobs, [&](std::size_t i) {
    const Graph g = cat[i];
    return min_deletion_size(g, target) == target ? write_graph6(g) : std::string{};
  });
  std::vector<std::string> out;
  for (const auto& h : hits) {
    if (!h.empty()) out.push_back(h);
  }
  return out;
}

}  // namespace rep3
