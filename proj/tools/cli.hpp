#pragma once

// Command-line front end. Exit status: 0 success or verified, 1 a violation
// or "none" result, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rep3/rep3.hpp"

namespace rep3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  std::string graph;
  std::vector<int> triple;
  int max_k = 0;
  int budget = -1;
  int n = 0;
  int min_n = 5;
  int max_n = 8;
  std::string input;
  std::string out;
  int jobs = default_jobs();
  std::string format = "json";
};

/// Inline graph6, or @path naming an edge-list JSON file (a graph6 file is
/// accepted too: its first record is used).
inline Graph load_graph(const std::string& arg) {
  if (!arg.starts_with('@')) return parse_graph6(arg);
  const std::string path = arg.substr(1);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedRecord, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_edge_list_json(text);
  std::istringstream lines(text);
  auto graphs = read_graph6_stream(lines);
  if (graphs.empty()) throw Error(ErrorCode::MalformedRecord, path + " holds no graph");
  return graphs.front();
}

inline Triple load_triple(const std::vector<int>& t) {
  if (t.size() != 3) throw Error(ErrorCode::NotATriple, "--triple needs exactly three comma-separated vertices");
  return {t[0], t[1], t[2]};
}

inline void emit_report(std::ostream& out, const VerificationReport& r, const std::string& format) {
  if (format == "table") {
    out << to_table(r);
  } else {
    out << to_json(r).dump(2) << '\n';
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CliConfig cfg;
  CLI::App app{"Three equal degrees after at most three vertex deletions", "rep3"};
  app.require_subcommand(1, 1);

  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph, "graph6 string or @edge-list.json")->required();
  };
  const auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  auto* solve = app.add_subcommand("solve", "at most 3 deletions leaving three equal degrees");
  add_graph(solve);
  auto* oracle = app.add_subcommand("oracle", "exact minimum deletion set within a budget");
  add_graph(oracle);
  oracle->add_option("--max-k", cfg.max_k, "largest deletion set size")->required();
  auto* classify = app.add_subcommand("classify", "classify a vertex triple");
  add_graph(classify);
  classify->add_option("--triple", cfg.triple, "a,b,c")->required()->delimiter(',');
  auto* equalize = app.add_subcommand("equalize", "equalise the degrees of a given triple");
  add_graph(equalize);
  equalize->add_option("--triple", cfg.triple, "a,b,c")->required()->delimiter(',');
  equalize->add_option("--budget", cfg.budget, "deletion budget (default: the triple's own budget)")
      ->check(CLI::NonNegativeNumber);
  auto* prof = app.add_subcommand("profile", "degree histogram, rep and degree classes");
  add_graph(prof);
  auto* gen = app.add_subcommand("gen", "all graphs of one order as graph6");
  gen->add_option("--n", cfg.n, "order")->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  gen->add_option("--out", cfg.out, "output file (default stdout)");
  auto* verify = app.add_subcommand("verify", "exhaustive theorem check");
  verify->add_option("--min-n", cfg.min_n)->required()->check(CLI::Range(5, kMaxEnumerationOrder));
  verify->add_option("--max-n", cfg.max_n)->required()->check(CLI::Range(5, kMaxEnumerationOrder));
  verify->add_option("--input", cfg.input, "graph6 catalogue instead of generation");
  add_jobs(verify);
  add_format(verify);
  auto* lemmas = app.add_subcommand("lemmas", "exhaustive check of the structural lemmas");
  lemmas->add_option("--max-n", cfg.max_n)->required()->check(CLI::Range(1, 8));
  add_jobs(lemmas);
  add_format(lemmas);
  auto* extremal = app.add_subcommand("extremal", "graphs that need exactly 3 deletions");
  extremal->add_option("--n", cfg.n)->required()->check(CLI::Range(5, kMaxEnumerationOrder));
  add_jobs(extremal);
  auto* identity = app.add_subcommand("identity", "degree-class counting identity");
  identity->add_option("--max-n", cfg.max_n)->required()->check(CLI::Range(1, 8));
  add_jobs(identity);
  add_format(identity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const Graph g = load_graph(cfg.graph);
      std::optional<DeletionCertificate> cert;
      if (g.order() >= 5) {
        cert = solve3(g);
      } else if (g.order() >= 3) {
        cert = min_deletion_for_rep3(g, g.order() - 3);
      }
      if (!cert) {
        out << "none\n";
        return kExitFinding;
      }
      out << to_json(*cert).dump() << '\n';
      return kExitOk;
    }
    if (oracle->parsed()) {
      const Graph g = load_graph(cfg.graph);
      const auto cert = min_deletion_for_rep3(g, cfg.max_k);
      if (!cert) {
        out << "none\n";
        return kExitFinding;
      }
      out << to_json(*cert).dump() << '\n';
      return kExitOk;
    }
    if (classify->parsed()) {
      const Graph g = load_graph(cfg.graph);
      out << to_json(classify_triple(g, load_triple(cfg.triple))).dump() << '\n';
      return kExitOk;
    }
    if (equalize->parsed()) {
      const Graph g = load_graph(cfg.graph);
      const Triple t = load_triple(cfg.triple);
      int b = cfg.budget;
      if (b < 0) {
        const TripleClassification tc = classify_triple(g, t);
        b = tc.feasible() ? budget(tc) : g.order() - 3;
      }
      b = std::min(b, g.order() - 3);
      const auto del = equalize_triple(g, t, b);
      if (!del) {
        out << "none\n";
        return kExitFinding;
      }
      out << Json{{"deleted", vertex_list_json(*del)}, {"budget", b}}.dump() << '\n';
      return kExitOk;
    }
    if (prof->parsed()) {
      out << to_json(profile(load_graph(cfg.graph))).dump() << '\n';
      return kExitOk;
    }
    if (gen->parsed()) {
      const GraphCatalogue cat = enumerate_graphs(cfg.n);
      std::ofstream file;
      if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::binary);
        if (!file) throw Error(ErrorCode::MalformedRecord, "cannot write " + cfg.out);
      }
      std::ostream& sink = cfg.out.empty() ? out : file;
      for (std::size_t i = 0; i < cat.size(); ++i) sink << cat.form(i).bytes() << '\n';
      return kExitOk;
    }
    if (verify->parsed()) {
      if (cfg.min_n > cfg.max_n) throw Error(ErrorCode::OrderOutOfRange, "--min-n exceeds --max-n");
      VerificationReport r;
      if (cfg.input.empty()) {
        r = verify_theorem(cfg.min_n, cfg.max_n, cfg.jobs);
      } else {
        std::ifstream in(cfg.input, std::ios::binary);
        if (!in) throw Error(ErrorCode::MalformedRecord, "cannot open " + cfg.input);
        const auto graphs = read_graph6_stream(in);
        r = verify_theorem(graphs, cfg.min_n, cfg.max_n, cfg.jobs);
      }
      emit_report(out, r, cfg.format);
      return r.verified() ? kExitOk : kExitFinding;
    }
    if (lemmas->parsed()) {
      const VerificationReport r = verify_lemmas(cfg.max_n, cfg.jobs);
      emit_report(out, r, cfg.format);
      return r.verified() ? kExitOk : kExitFinding;
    }
    if (identity->parsed()) {
      const VerificationReport r = counting_identity_suite(cfg.max_n, cfg.jobs);
      emit_report(out, r, cfg.format);
      return r.verified() ? kExitOk : kExitFinding;
    }
    if (extremal->parsed()) {
      const auto witnesses = find_extremal(cfg.n, cfg.jobs);
      out << Json{{"n", cfg.n}, {"min_deletion", std::min(3, cfg.n - 3)}, {"witnesses", witnesses}}.dump(2)
          << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "rep3: " << e.what() << '\n';
    return e.code() == ErrorCode::TheoremViolation ? kExitFinding : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rep3::cli
