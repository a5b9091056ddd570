#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ucsat/canonical.hpp"
#include "ucsat/families.hpp"
#include "ucsat/graph.hpp"
#include "ucsat/graph6.hpp"
#include "ucsat/paths.hpp"
#include "ucsat/saturation.hpp"
#include "ucsat/structure.hpp"

namespace ucsat {

enum class Connectivity { kConnected, kBiconnectedOnly };

struct SearchConfig {
  int t = 5;
  int n_min = 1;
  int n_max = 10;
  bool prune = true;
  bool oracle_mode = false;   // certify everything, no pruning rules
  Connectivity connectivity = Connectivity::kConnected;
  int workers = 1;
  bool dedup_filter = false;  // filter mode: drop isomorphic repeats
};

struct PruningRule {
  enum class Kind { kCycle, kHPattern };
  Kind kind = Kind::kCycle;
  int length = 0;      // kCycle
  HPattern pattern{};  // kHPattern
  std::string label;
};

/// The supergraph-closed exclusions for t: the target cycle itself, every
/// H_{k,t-k-1} for 2 <= k < t, and for t >= 5 the two long even cycles.
/// Only these are safe while augmenting, since adding vertices and edges
/// never removes an occurrence. C_{2t-2} duplicates H_{t-1,0}; both stay
/// listed so witnesses carry the familiar labels.
inline std::vector<PruningRule> pruning_rules(int t) {
  if (t < 3) throw std::invalid_argument("pruning_rules: t < 3");
  std::vector<PruningRule> rules;
  rules.push_back(
      {PruningRule::Kind::kCycle, t, {}, "C" + std::to_string(t)});
  for (int k = 2; k < t; ++k)
    rules.push_back({PruningRule::Kind::kHPattern,
                     0,
                     {k, t - k - 1},
                     "H_{" + std::to_string(k) + "," +
                         std::to_string(t - k - 1) + "}"});
  if (t >= 5) {
    rules.push_back({PruningRule::Kind::kCycle, 2 * t - 2, {},
                     "C" + std::to_string(2 * t - 2)});
    rules.push_back({PruningRule::Kind::kCycle, 2 * t - 4, {},
                     "C" + std::to_string(2 * t - 4)});
  }
  return rules;
}

struct SearchCounts {
  std::uint64_t examined = 0;  // distinct isomorphism classes materialized
  std::uint64_t pruned = 0;    // children rejected by a rule, before dedup
  std::uint64_t certified = 0;
  std::uint64_t trivial = 0;
  std::vector<std::uint64_t> visited_per_level;  // index = vertex count
};

struct CertifiedGraph {
  int n = 0;
  CanonicalForm canon;
  SaturationCertificate cert;  // labeled per the canonical form
  LemmaReport audit;
};

struct SearchOutcome {
  std::vector<CertifiedGraph> certified;  // nontrivial, by (n, canon bytes)
  std::vector<CertifiedGraph> trivial;    // complete graphs below t
  SearchCounts counts;
};

namespace detail {

/// Open-addressing set for canonical codes (nonzero except possibly the
/// edgeless code, tracked separately).
class CodeSet {
 public:
  CodeSet() : slots_(64, 0) {}

  bool insert(std::uint64_t key) {
    if (key == 0) return !std::exchange(has_zero_, true);
    if ((size_ + 1) * 2 > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t i = mix(key) & mask;
    while (slots_[i]) {
      if (slots_[i] == key) return false;
      i = (i + 1) & mask;
    }
    slots_[i] = key;
    ++size_;
    return true;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  void grow() {
    std::vector<std::uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, 0);
    std::size_t mask = slots_.size() - 1;
    for (std::uint64_t k : old) {
      if (!k) continue;
      std::size_t i = mix(k) & mask;
      while (slots_[i]) i = (i + 1) & mask;
      slots_[i] = k;
    }
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
  bool has_zero_ = false;
};

/// A new pattern occurrence in a child must involve the new vertex for
/// cycle rules (the parent was already clean), so those use the targeted
/// cycle test. ell = 0 patterns are plain even cycles and get the same
/// treatment; proper H patterns fall back to the full search.
inline bool violates_rules(const Graph& child, int new_vertex,
                           const std::vector<PruningRule>& rules) {
  int n = child.order();
  for (const auto& r : rules) {
    if (r.kind == PruningRule::Kind::kHPattern) continue;
    if (r.length <= n &&
        has_cycle_of_length_through(child, r.length, new_vertex))
      return true;
  }
  for (const auto& r : rules) {
    if (r.kind != PruningRule::Kind::kHPattern) continue;
    const HPattern& p = r.pattern;
    if (2 * p.m + p.ell > n) continue;
    if (p.ell == 0) {
      if (has_cycle_of_length_through(child, 2 * p.m, new_vertex)) return true;
    } else if (contains_pattern(child, p)) {
      return true;
    }
  }
  return false;
}

struct CodePolicy {  // child order <= 11: one-word canonical codes
  using Key = std::uint64_t;
  struct Set {
    CodeSet s;
    bool insert(std::uint64_t k) { return s.insert(k); }
  };
  static Key key(const Graph& g) { return canonical_code64(g); }
  static Graph rebuild(Key code, int n) {
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u, ++bit)
        if ((code >> bit) & 1u) g.add_edge(u, v);
    return g;
  }
};

struct BytePolicy {  // general fallback: canonical graph6 bytes
  using Key = std::string;
  struct Set {
    std::unordered_set<std::string> s;
    bool insert(const std::string& k) { return s.insert(k).second; }
  };
  static Key key(const Graph& g) { return canonical_form(g).bytes; }
  static Graph rebuild(const Key& bytes, int) { return decode_graph6(bytes); }
};

template <typename Policy>
void expand_chunk(const std::vector<Graph>& parents, std::size_t lo,
                  std::size_t hi, const std::vector<PruningRule>& rules,
                  std::vector<typename Policy::Key>& out_keys,
                  std::uint64_t& out_pruned) {
  typename Policy::Set seen;
  for (std::size_t i = lo; i < hi; ++i) {
    const Graph& p = parents[i];
    int pn = p.order();
    std::uint64_t top = std::uint64_t{1} << pn;
    for (std::uint64_t s = 1; s < top; ++s) {
      Graph child = p.with_vertex(s);
      if (!rules.empty() && violates_rules(child, pn, rules)) {
        ++out_pruned;
        continue;
      }
      auto key = Policy::key(child);
      if (seen.insert(key)) out_keys.push_back(key);
    }
  }
}

}  // namespace detail

namespace detail {

class Enumerator {
 public:
  explicit Enumerator(const SearchConfig& cfg) : cfg_(cfg) {
    if (cfg.t < 3 || cfg.t > kMaxVertices)
      throw std::invalid_argument("enumerate: t out of [3, 64]");
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min || cfg.n_max > kMaxVertices)
      throw std::invalid_argument("enumerate: bad vertex range");
    if (cfg.workers < 1)
      throw std::invalid_argument("enumerate: workers must be positive");
    if (cfg.connectivity == Connectivity::kBiconnectedOnly && cfg.t < 6)
      throw std::invalid_argument(
          "enumerate: biconnected-only mode needs t >= 6");
    if (cfg.prune && !cfg.oracle_mode) rules_ = pruning_rules(cfg.t);
  }

  SearchOutcome run() {
    out_.counts.visited_per_level.assign(cfg_.n_max + 1, 0);
    std::vector<Graph> parents{Graph(1)};
    out_.counts.visited_per_level[1] = 1;
    out_.counts.examined = 1;
    if (cfg_.n_min <= 1) take(parents[0]);
    for (int pn = 1; pn < cfg_.n_max; ++pn) {
      if (parents.empty()) break;
      if (pn + 1 <= 11)
        parents = step<CodePolicy>(parents, pn + 1);
      else
        parents = step<BytePolicy>(parents, pn + 1);
    }
    auto order = [](const CertifiedGraph& a, const CertifiedGraph& b) {
      return std::tie(a.n, a.canon.bytes) < std::tie(b.n, b.canon.bytes);
    };
    std::sort(out_.certified.begin(), out_.certified.end(), order);
    std::sort(out_.trivial.begin(), out_.trivial.end(), order);
    out_.counts.certified = out_.certified.size();
    out_.counts.trivial = out_.trivial.size();
    return std::move(out_);
  }

 private:
  template <typename Policy>
  std::vector<Graph> step(const std::vector<Graph>& parents, int child_n) {
    using Key = typename Policy::Key;
    std::size_t w =
        std::min<std::size_t>(static_cast<std::size_t>(cfg_.workers),
                              parents.size());
    std::vector<std::vector<Key>> keys(w);
    std::vector<std::uint64_t> pruned(w, 0);
    if (w <= 1) {
      expand_chunk<Policy>(parents, 0, parents.size(), rules_, keys[0],
                           pruned[0]);
    } else {
      std::vector<std::thread> pool;
      std::size_t base = parents.size() / w, extra = parents.size() % w;
      std::size_t lo = 0;
      for (std::size_t i = 0; i < w; ++i) {
        std::size_t hi = lo + base + (i < extra ? 1 : 0);
        pool.emplace_back([&, i, lo, hi] {
          expand_chunk<Policy>(parents, lo, hi, rules_, keys[i], pruned[i]);
        });
        lo = hi;
      }
      for (auto& th : pool) th.join();
    }
    std::vector<Key> all;
    std::size_t total = 0;
    for (const auto& ks : keys) total += ks.size();
    all.reserve(total);
    for (auto& ks : keys) {
      all.insert(all.end(), std::make_move_iterator(ks.begin()),
                 std::make_move_iterator(ks.end()));
      ks.clear();
      ks.shrink_to_fit();
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::uint64_t p : pruned) out_.counts.pruned += p;
    out_.counts.visited_per_level[child_n] += all.size();
    out_.counts.examined += all.size();
    bool keep = child_n < cfg_.n_max;
    bool in_range = child_n >= cfg_.n_min && child_n <= cfg_.n_max;
    std::vector<Graph> next;
    if (keep) next.reserve(all.size());
    for (const Key& k : all) {
      Graph c = Policy::rebuild(k, child_n);
      if (in_range) take(c);
      if (keep) next.push_back(std::move(c));
    }
    return next;
  }

  /// Certify a canonically labeled graph and bucket it if it qualifies.
  void take(const Graph& c) {
    SaturationCertificate cert = certify(c, cfg_.t);
    if (cert.verdict != Verdict::kUniquelySaturated) return;
    if (cfg_.connectivity == Connectivity::kBiconnectedOnly &&
        !is_two_connected(c))
      return;
    CertifiedGraph entry{c.order(), CanonicalForm{encode_graph6(c)},
                         std::move(cert), lemma_audit(c, cfg_.t)};
    if (entry.cert.trivial)
      out_.trivial.push_back(std::move(entry));
    else
      out_.certified.push_back(std::move(entry));
  }

  SearchConfig cfg_;
  std::vector<PruningRule> rules_;
  SearchOutcome out_;
};

}  // namespace detail

/// Isomorph-free exhaustive enumeration of connected graphs in the given
/// vertex range, certifying each class in range and keeping exactly the
/// uniquely C_t-saturated ones. Identical results for any worker count.
inline SearchOutcome enumerate_search(const SearchConfig& cfg) {
  return detail::Enumerator(cfg).run();
}

struct FilterIssue {
  std::size_t line = 0;
  std::string message;
};

struct FilterRecord {
  std::size_t line = 0;
  std::string input;
  bool decoded = false;
  bool duplicate = false;
  bool kept = false;
  std::string note;  // verdict, duplicate notice, or decode error
};

struct FilterOutcome {
  SearchOutcome outcome;
  std::vector<FilterIssue> issues;    // decode failures, by line number
  std::vector<FilterRecord> records;  // one per input line, input order
};

/// Certifies externally supplied graph6 lines with the same bucketing as
/// enumerate_search. Decode failures are recorded and skipped.
inline FilterOutcome filter_stream(const SearchConfig& cfg,
                                   const std::vector<std::string>& lines) {
  if (cfg.t < 3 || cfg.t > kMaxVertices)
    throw std::invalid_argument("filter_stream: t out of [3, 64]");
  FilterOutcome out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    FilterRecord rec{i + 1, lines[i], false, false, false, ""};
    Graph g(1);
    try {
      g = decode_graph6(lines[i]);
      rec.decoded = true;
    } catch (const Graph6Error& e) {
      rec.note = e.what();
      out.issues.push_back({i + 1, e.what()});
      out.records.push_back(std::move(rec));
      continue;
    }
    ++out.outcome.counts.examined;
    Graph c = canonical_graph(g);
    std::string bytes = encode_graph6(c);
    if (cfg.dedup_filter && !seen.insert(bytes).second) {
      rec.duplicate = true;
      rec.note = "duplicate of an earlier class";
      out.records.push_back(std::move(rec));
      continue;
    }
    SaturationCertificate cert = certify(c, cfg.t);
    rec.note = to_string(cert.verdict);
    bool keep = cert.verdict == Verdict::kUniquelySaturated;
    if (keep && cfg.connectivity == Connectivity::kBiconnectedOnly &&
        !is_two_connected(c)) {
      keep = false;
      rec.note += " (dropped: not 2-connected)";
    }
    if (keep && cfg.connectivity == Connectivity::kConnected &&
        !is_connected(c)) {
      keep = false;
      rec.note += " (dropped: disconnected)";
    }
    if (keep) {
      rec.kept = true;
      CertifiedGraph entry{c.order(), CanonicalForm{std::move(bytes)},
                           std::move(cert), lemma_audit(c, cfg.t)};
      if (entry.cert.trivial) {
        rec.note += " (trivial)";
        out.outcome.trivial.push_back(std::move(entry));
      } else {
        out.outcome.certified.push_back(std::move(entry));
      }
    }
    out.records.push_back(std::move(rec));
  }
  auto order = [](const CertifiedGraph& a, const CertifiedGraph& b) {
    return std::tie(a.n, a.canon.bytes) < std::tie(b.n, b.canon.bytes);
  };
  std::sort(out.outcome.certified.begin(), out.outcome.certified.end(), order);
  std::sort(out.outcome.trivial.begin(), out.outcome.trivial.end(), order);
  out.outcome.counts.certified = out.outcome.certified.size();
  out.outcome.counts.trivial = out.outcome.trivial.size();
  return out;
}

}  // namespace ucsat
