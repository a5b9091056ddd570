// ucsat: checker and search driver for uniquely C_t-saturated graphs.
//
// Exit codes: 0 success, 2 bad flags or arguments, 3 graph6 decode
// failure, 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ucsat/canonical.hpp"
#include "ucsat/families.hpp"
#include "ucsat/graph.hpp"
#include "ucsat/graph6.hpp"
#include "ucsat/json_io.hpp"
#include "ucsat/paths.hpp"
#include "ucsat/saturation.hpp"
#include "ucsat/search.hpp"
#include "ucsat/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDecode = 3;
constexpr int kExitInternal = 4;

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open input file: " + path);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

struct Options {
  int t = 5;
  int n_min = 1;
  int n_max = 10;
  bool prune = true;
  bool oracle = false;
  bool biconnected_only = false;
  bool dedup = false;
  int workers = 1;
  std::string format = "human";
  std::string mode = "generate";
  std::string input = "-";
  // gen
  std::string family;
  std::vector<int> params;
  // paths
  int u = 0, v = 1, k = 2;
};

ucsat::SearchConfig to_config(const Options& o) {
  ucsat::SearchConfig cfg;
  cfg.t = o.t;
  cfg.n_min = o.n_min;
  cfg.n_max = o.n_max;
  cfg.prune = o.prune;
  cfg.oracle_mode = o.oracle;
  cfg.connectivity = o.biconnected_only
                         ? ucsat::Connectivity::kBiconnectedOnly
                         : ucsat::Connectivity::kConnected;
  cfg.workers = o.workers;
  cfg.dedup_filter = o.dedup;
  return cfg;
}

bool jsonl(const Options& o) { return o.format == "jsonl"; }

int run_check(const Options& o) {
  auto lines = read_lines(o.input);
  bool any_decode_error = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    ucsat::Graph g(1);
    try {
      g = ucsat::decode_graph6(lines[i]);
    } catch (const ucsat::Graph6Error& e) {
      std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
      any_decode_error = true;
      continue;
    }
    auto cert = ucsat::certify(g, o.t);
    if (jsonl(o)) {
      std::cout << ucsat::to_json(cert, lines[i]).dump() << std::endl;
    } else {
      std::cout << lines[i] << "  " << ucsat::to_string(cert.verdict);
      if (cert.trivial) std::cout << " (trivial)";
      if (cert.contains_target) std::cout << " (contains C_" << o.t << ")";
      std::cout << "\n";
    }
  }
  return any_decode_error ? kExitDecode : kExitOk;
}

int run_audit(const Options& o) {
  auto lines = read_lines(o.input);
  bool any_decode_error = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    ucsat::Graph g(1);
    try {
      g = ucsat::decode_graph6(lines[i]);
    } catch (const ucsat::Graph6Error& e) {
      std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
      any_decode_error = true;
      continue;
    }
    auto rep = ucsat::lemma_audit(g, o.t);
    if (jsonl(o)) {
      nlohmann::json obj = {{"g6", lines[i]},
                            {"t", o.t},
                            {"all_applicable_passed",
                             rep.all_applicable_passed()},
                            {"audit", ucsat::to_json(rep)}};
      std::cout << obj.dump() << std::endl;
    } else {
      std::cout << lines[i] << "\n";
      for (const auto& e : rep.entries) {
        std::cout << "  " << e.name << ": "
                  << (!e.applicable ? "n/a" : e.passed ? "pass" : "FAIL");
        if (e.applicable && !e.passed) {
          std::cout << "  witness:";
          for (int w : e.witness) std::cout << ' ' << w;
          if (!e.detail.empty()) std::cout << "  (" << e.detail << ")";
        }
        std::cout << "\n";
      }
      std::cout << "  => " << (rep.all_applicable_passed()
                                   ? "all applicable predicates pass"
                                   : "applicable failures present")
                << "\n";
    }
  }
  return any_decode_error ? kExitDecode : kExitOk;
}

void print_outcome(const ucsat::SearchOutcome& out, const Options& o) {
  if (jsonl(o)) {
    for (const auto& cg : out.certified)
      std::cout << ucsat::to_json(cg, false).dump() << std::endl;
    for (const auto& cg : out.trivial)
      std::cout << ucsat::to_json(cg, true).dump() << std::endl;
    std::cout << ucsat::summary_json(out).dump() << std::endl;
    return;
  }
  for (const auto& cg : out.certified)
    std::cout << "certified  n=" << cg.n << "  " << cg.canon.bytes << "\n";
  for (const auto& cg : out.trivial)
    std::cout << "trivial    n=" << cg.n << "  " << cg.canon.bytes << "\n";
  std::cout << "summary: examined=" << out.counts.examined
            << " pruned=" << out.counts.pruned
            << " certified=" << out.counts.certified
            << " trivial=" << out.counts.trivial << "\n";
  if (!out.counts.visited_per_level.empty()) {
    std::cout << "visited:";
    for (std::size_t n = 1; n < out.counts.visited_per_level.size(); ++n)
      std::cout << " n" << n << "=" << out.counts.visited_per_level[n];
    std::cout << "\n";
  }
}

int run_filter(const Options& o) {
  auto res = ucsat::filter_stream(to_config(o), read_lines(o.input));
  if (jsonl(o)) {
    for (const auto& r : res.records) {
      nlohmann::json obj = {{"type", "record"},   {"line", r.line},
                            {"input", r.input},   {"decoded", r.decoded},
                            {"duplicate", r.duplicate}, {"kept", r.kept},
                            {"note", r.note}};
      std::cout << obj.dump() << std::endl;
    }
  } else {
    for (const auto& r : res.records)
      std::cout << "line " << r.line << ": " << r.input << "  -> " << r.note
                << "\n";
  }
  print_outcome(res.outcome, o);
  for (const auto& issue : res.issues)
    std::cerr << "line " << issue.line << ": " << issue.message << "\n";
  return res.issues.empty() ? kExitOk : kExitDecode;
}

int run_search(const Options& o) {
  if (o.mode == "filter") return run_filter(o);
  auto out = ucsat::enumerate_search(to_config(o));
  print_outcome(out, o);
  return kExitOk;
}

int run_gen(const Options& o) {
  auto need = [&](std::size_t n) {
    if (o.params.size() != n)
      throw std::invalid_argument("gen " + o.family + ": expected " +
                                  std::to_string(n) + " parameter(s)");
  };
  ucsat::Graph g(1);
  if (o.family == "friendship") {
    need(1);
    g = ucsat::friendship_graph(o.params[0]);
  } else if (o.family == "cycle") {
    need(1);
    g = ucsat::cycle_graph(o.params[0]);
  } else if (o.family == "complete") {
    need(1);
    g = ucsat::complete_graph(o.params[0]);
  } else if (o.family == "path") {
    need(1);
    g = ucsat::path_graph(o.params[0]);
  } else if (o.family == "star") {
    need(1);
    g = ucsat::star_graph(o.params[0]);
  } else if (o.family == "h") {
    need(2);
    g = ucsat::h_pattern_graph({o.params[0], o.params[1]});
  } else if (o.family == "petersen") {
    need(0);
    g = ucsat::petersen_graph();
  } else {
    throw std::invalid_argument("gen: unknown family '" + o.family + "'");
  }
  std::cout << ucsat::encode_graph6(g) << "\n";
  return kExitOk;
}

int run_paths(const Options& o) {
  auto lines = read_lines(o.input);
  if (lines.empty()) throw std::invalid_argument("paths: no input graph");
  ucsat::Graph g(1);
  try {
    g = ucsat::decode_graph6(lines[0]);
  } catch (const ucsat::Graph6Error& e) {
    std::cerr << "line 1: " << e.what() << "\n";
    return kExitDecode;
  }
  std::cout << ucsat::count_paths_between(g, o.u, o.v, o.k) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"exact toolkit for uniquely C_t-saturated graphs"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"human", "jsonl"}));
  };
  auto add_t = [&](CLI::App* cmd) {
    cmd->add_option("--t", o.t, "cycle order t")
        ->required()
        ->check(CLI::Range(3, 64));
  };

  auto* check = app.add_subcommand("check", "certify graph6 input lines");
  add_t(check);
  add_format(check);
  check->add_option("input", o.input, "graph6 file, or - for stdin");

  auto* audit = app.add_subcommand("audit", "run the lemma audit per graph");
  add_t(audit);
  add_format(audit);
  audit->add_option("input", o.input, "graph6 file, or - for stdin");

  auto* search = app.add_subcommand("search", "enumerate and certify");
  add_t(search);
  add_format(search);
  search->add_option("--n-min", o.n_min, "smallest order to certify")
      ->check(CLI::Range(1, 64));
  search->add_option("--n-max", o.n_max, "largest order to reach")
      ->check(CLI::Range(1, 64));
  search->add_flag("--prune,!--no-prune", o.prune,
                   "apply monotone pruning rules (default on)");
  search->add_flag("--oracle", o.oracle,
                   "oracle mode: enumerate everything, no pruning");
  search->add_option("--workers", o.workers, "worker thread count")
      ->check(CLI::Range(1, 64));
  search->add_flag("--biconnected-only", o.biconnected_only,
                   "keep 2-connected graphs only (t >= 6)");
  search->add_option("--mode", o.mode, "generate or filter stdin")
      ->check(CLI::IsMember({"generate", "filter"}));
  search->add_option("--input", o.input, "graph6 source for --mode filter");

  auto* filter = app.add_subcommand("filter", "certify an external stream");
  add_t(filter);
  add_format(filter);
  filter->add_flag("--dedup", o.dedup, "drop isomorphic repeats");
  filter->add_flag("--biconnected-only", o.biconnected_only,
                   "keep 2-connected graphs only (t >= 6)");
  filter->add_option("input", o.input, "graph6 file, or - for stdin");

  auto* gen = app.add_subcommand("gen", "emit a named family as graph6");
  gen->add_option("family", o.family,
                  "friendship | cycle | complete | path | star | h | petersen")
      ->required();
  gen->add_option("params", o.params, "family parameters");

  auto* paths = app.add_subcommand("paths", "count k-vertex u,v-paths");
  paths->add_option("--u", o.u, "first endpoint")->required();
  paths->add_option("--v", o.v, "second endpoint")->required();
  paths->add_option("--k", o.k, "path order (vertex count)")->required();
  paths->add_option("input", o.input, "graph6 file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return run_check(o);
    if (app.got_subcommand(audit)) return run_audit(o);
    if (app.got_subcommand(search)) return run_search(o);
    if (app.got_subcommand(filter)) return run_filter(o);
    if (app.got_subcommand(gen)) return run_gen(o);
    if (app.got_subcommand(paths)) return run_paths(o);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const ucsat::Graph6Error& e) {
    std::cerr << "decode error: " << e.what() << "\n";
    return kExitDecode;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
