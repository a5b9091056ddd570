#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ucsat/graph.hpp"
#include "ucsat/paths.hpp"

namespace ucsat {

enum class Verdict { kNotSaturated, kSaturated, kUniquelySaturated };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kNotSaturated: return "not_saturated";
    case Verdict::kSaturated: return "saturated";
    case Verdict::kUniquelySaturated: return "uniquely_saturated";
  }
  return "?";
}

/// Non-edge {u, v} with the number of C_t copies its addition would create.
struct NonEdgeCount {
  int u = 0;
  int v = 0;
  std::uint64_t count = 0;
  bool operator==(const NonEdgeCount&) const = default;
};

struct SaturationCertificate {
  int t = 0;
  bool contains_target = false;          // C_t already a subgraph
  std::vector<NonEdgeCount> non_edge_counts;  // lexicographic by (u, v)
  Verdict verdict = Verdict::kNotSaturated;
  bool trivial = false;  // complete with fewer than t vertices
};

/// Exact certificate: adding uv creates as many C_t copies as there are
/// paths on t vertices between u and v, so each non-edge gets that count.
inline SaturationCertificate certify(const Graph& g, int t) {
  if (t < 3 || t > kMaxVertices)
    throw std::invalid_argument("certify: t out of [3, 64]");
  int n = g.order();
  SaturationCertificate cert;
  cert.t = t;
  cert.contains_target = t <= n && has_cycle_of_length(g, t);
  bool all_one = true;
  bool all_positive = true;
  for (auto [u, v] : complement_non_edges(g)) {
    std::uint64_t c = t <= n ? count_paths_between(g, u, v, t) : 0;
    cert.non_edge_counts.push_back({u, v, c});
    all_one = all_one && c == 1;
    all_positive = all_positive && c > 0;
  }
  if (cert.contains_target)
    cert.verdict = Verdict::kNotSaturated;
  else if (all_one)
    cert.verdict = Verdict::kUniquelySaturated;  // vacuous when complete
  else if (all_positive)
    cert.verdict = Verdict::kSaturated;
  else
    cert.verdict = Verdict::kNotSaturated;
  cert.trivial = cert.verdict == Verdict::kUniquelySaturated &&
                 g.is_complete() && n < t;
  return cert;
}

inline bool is_uniquely_saturated(const Graph& g, int t) {
  return certify(g, t).verdict == Verdict::kUniquelySaturated;
}

/// Nontrivial means at least t vertices (the complete graphs below t are
/// the trivial examples).
inline bool is_nontrivial(const Graph& g, int t) { return g.order() >= t; }

}  // namespace ucsat
