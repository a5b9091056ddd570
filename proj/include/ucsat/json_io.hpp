#pragma once

#include <string>

#include <json.hpp>

#include "ucsat/graph6.hpp"
#include "ucsat/saturation.hpp"
#include "ucsat/search.hpp"
#include "ucsat/structure.hpp"

namespace ucsat {

inline nlohmann::json to_json(const SaturationCertificate& cert,
                              const std::string& g6) {
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& nec : cert.non_edge_counts)
    counts.push_back({nec.u, nec.v, nec.count});
  return {{"g6", g6},
          {"t", cert.t},
          {"verdict", to_string(cert.verdict)},
          {"contains_target", cert.contains_target},
          {"trivial", cert.trivial},
          {"nontrivial", !cert.trivial &&
                             cert.verdict == Verdict::kUniquelySaturated},
          {"non_edge_counts", counts}};
}

inline nlohmann::json to_json(const LemmaReport& rep) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& e : rep.entries) {
    nlohmann::json entry = {{"applicable", e.applicable},
                            {"passed", e.passed}};
    if (!e.witness.empty()) entry["witness"] = e.witness;
    if (!e.detail.empty()) entry["detail"] = e.detail;
    obj[e.name] = entry;
  }
  return obj;
}

inline nlohmann::json to_json(const CertifiedGraph& cg, bool trivial_bucket) {
  return {{"type", trivial_bucket ? "trivial" : "certified"},
          {"n", cg.n},
          {"g6", cg.canon.bytes},
          {"certificate", to_json(cg.cert, cg.canon.bytes)},
          {"audit", to_json(cg.audit)}};
}

inline nlohmann::json summary_json(const SearchOutcome& out) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t n = 1; n < out.counts.visited_per_level.size(); ++n)
    levels.push_back({{"n", n}, {"visited", out.counts.visited_per_level[n]}});
  return {{"type", "summary"},
          {"examined", out.counts.examined},
          {"pruned", out.counts.pruned},
          {"certified", out.counts.certified},
          {"trivial", out.counts.trivial},
          {"levels", levels}};
}

}  // namespace ucsat
