#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ucsat/families.hpp"
#include "ucsat/graph.hpp"
#include "ucsat/paths.hpp"
#include "ucsat/saturation.hpp"

namespace ucsat {

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // each sorted; ordered by vertex list
  std::vector<int> cut_vertices;         // sorted
  std::vector<bool> block_is_complete;
};

/// Standard biconnected components via DFS lowpoints with an edge stack.
inline BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("block_decomposition: disconnected graph");
  int n = g.order();
  BlockDecomposition out;
  if (n == 1) {
    out.blocks.push_back({0});
    out.block_is_complete.push_back(true);
    return out;
  }
  std::array<int, kMaxVertices> disc{}, low{}, parent{}, stack{};
  std::array<std::uint64_t, kMaxVertices> rem{};
  std::array<bool, kMaxVertices> is_cut{};
  disc.fill(-1);
  parent.fill(-1);
  for (int v = 0; v < n; ++v) rem[v] = g.neighbors(v);
  std::vector<std::pair<int, int>> estack;
  int timer = 0, top = 0, root_children = 0;
  stack[0] = 0;
  disc[0] = low[0] = timer++;
  while (top >= 0) {
    int v = stack[top];
    if (rem[v]) {
      int w = std::countr_zero(rem[v]);
      rem[v] &= rem[v] - 1;
      if (w == parent[v]) continue;
      if (disc[w] < 0) {
        parent[w] = v;
        if (v == 0) ++root_children;
        estack.emplace_back(v, w);
        disc[w] = low[w] = timer++;
        stack[++top] = w;
      } else if (disc[w] < disc[v]) {
        estack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    --top;
    if (top < 0) break;
    int u = stack[top];
    low[u] = std::min(low[u], low[v]);
    if (low[v] >= disc[u]) {
      if (u != 0 || root_children > 1) is_cut[u] = true;
      std::uint64_t members = 0;
      while (!estack.empty()) {
        auto [a, b] = estack.back();
        estack.pop_back();
        members |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        if (a == u && b == v) break;
      }
      out.blocks.push_back(bits_to_vector(members));
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (const auto& blk : out.blocks) {
    bool complete = true;
    for (std::size_t i = 0; i < blk.size() && complete; ++i)
      for (std::size_t j = i + 1; j < blk.size() && complete; ++j)
        complete = g.has_edge(blk[i], blk[j]);
    out.block_is_complete.push_back(complete);
  }
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  return out;
}

struct HWitness {
  std::vector<int> cycle;  // the 2m-cycle in traversal order
  std::vector<int> tail;   // pendant path, starting at the attachment vertex
};

/// Witness for H_{m,ell} as a subgraph: a 2m-cycle plus a pendant path of
/// ell edges rooted at one cycle vertex, all vertices distinct.
inline std::optional<HWitness> find_pattern(const Graph& g, const HPattern& p) {
  if (p.m < 2) throw std::invalid_argument("find_pattern: m < 2");
  if (p.ell < 0) throw std::invalid_argument("find_pattern: ell < 0");
  int n = g.order();
  int c = 2 * p.m;
  if (c + p.ell > n) return std::nullopt;
  std::optional<HWitness> out;
  for_each_cycle_of_length(g, c, [&](const std::vector<int>& cyc) {
    std::uint64_t cyc_mask = 0;
    for (int v : cyc) cyc_mask |= std::uint64_t{1} << v;
    for (int root : cyc) {
      if (p.ell == 0) {
        out = HWitness{cyc, {root}};
        return false;
      }
      // DFS for a simple path of ell edges leaving the cycle at root.
      std::array<int, kMaxVertices> path{};
      std::array<std::uint64_t, kMaxVertices> cand{};
      path[0] = root;
      int depth = 0;
      std::uint64_t used = cyc_mask;
      cand[0] = g.neighbors(root) & ~used;
      while (depth >= 0) {
        if (!cand[depth]) {
          --depth;
          if (depth >= 0) used &= ~(std::uint64_t{1} << path[depth + 1]);
          continue;
        }
        int w = std::countr_zero(cand[depth]);
        cand[depth] &= cand[depth] - 1;
        path[depth + 1] = w;
        if (depth + 1 == p.ell) {
          out = HWitness{cyc, std::vector<int>(path.begin(),
                                               path.begin() + p.ell + 1)};
          return false;
        }
        ++depth;
        used |= std::uint64_t{1} << w;
        cand[depth] = g.neighbors(w) & ~used;
      }
    }
    return true;
  });
  return out;
}

inline bool contains_pattern(const Graph& g, const HPattern& p) {
  return find_pattern(g, p).has_value();
}

/// First pair of twins (equal open neighborhoods) in lexicographic order.
inline std::optional<std::pair<int, int>> find_twins(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) == g.neighbors(v)) return std::make_pair(u, v);
  return std::nullopt;
}

inline bool has_twins(const Graph& g) { return find_twins(g).has_value(); }

/// Recognizes F_k: one hub adjacent to everything, the rest paired into
/// triangles through the hub. K3 counts as F_1.
inline bool is_friendship(const Graph& g) {
  int n = g.order();
  if (n < 3 || n % 2 == 0) return false;
  if (n == 3) return g.edge_count() == 3;
  int hub = -1;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == n - 1) {
      if (hub >= 0) return false;
      hub = v;
    } else if (d != 2) {
      return false;
    }
  }
  if (hub < 0) return false;
  std::uint64_t hb = std::uint64_t{1} << hub;
  for (int v = 0; v < n; ++v) {
    if (v == hub) continue;
    std::uint64_t others = g.neighbors(v) & ~hb;
    if (std::popcount(others) != 1) return false;
    int w = std::countr_zero(others);
    if (g.neighbors(w) != (hb | (std::uint64_t{1} << v))) return false;
  }
  return true;
}

struct LemmaEntry {
  std::string name;
  bool applicable = false;
  bool passed = true;
  std::vector<int> witness;  // nonempty whenever applicable and failed
  std::string detail;
};

struct LemmaReport {
  std::vector<LemmaEntry> entries;

  bool all_applicable_passed() const {
    for (const auto& e : entries)
      if (e.applicable && !e.passed) return false;
    return true;
  }
  const LemmaEntry* find(std::string_view name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

namespace detail {

inline std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> v(g.order());
  for (int i = 0; i < g.order(); ++i) v[i] = i;
  return v;
}

}  // namespace detail

/// Evaluates every structural necessary condition against g, each entry
/// self-reporting whether it applies for this t and graph. On a graph that
/// really is uniquely C_t-saturated every applicable entry must pass.
inline LemmaReport lemma_audit(const Graph& g, int t) {
  if (t < 3) throw std::invalid_argument("lemma_audit: t < 3");
  int n = g.order();
  bool connected = is_connected(g);
  bool nontrivial = n >= t;
  LemmaReport rep;
  auto add = [&](LemmaEntry e) { rep.entries.push_back(std::move(e)); };

  {
    LemmaEntry e{.name = "blocks_uniquely_saturated", .applicable = connected};
    if (e.applicable) {
      auto bd = block_decomposition(g);
      for (const auto& blk : bd.blocks) {
        auto sub = induced_subgraph(g, blk);
        if (certify(sub, t).verdict != Verdict::kUniquelySaturated) {
          e.passed = false;
          e.witness = blk;
          e.detail = "block fails recertification";
          break;
        }
      }
    } else {
      e.detail = "needs a connected graph";
    }
    add(std::move(e));
  }

  {
    LemmaEntry e{.name = "complete_blocks_small",
                 .applicable = connected && nontrivial};
    if (e.applicable) {
      auto bd = block_decomposition(g);
      for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        if (bd.block_is_complete[i] && bd.blocks[i].size() > 3) {
          e.passed = false;
          e.witness = bd.blocks[i];
          e.detail = "complete block on more than 3 vertices";
          break;
        }
      }
    }
    add(std::move(e));
  }

  {
    LemmaEntry e{.name = "complete_blocks_disjoint",
                 .applicable = t >= 6 && connected && nontrivial};
    if (e.applicable) {
      auto bd = block_decomposition(g);
      for (std::size_t i = 0; i < bd.blocks.size() && e.passed; ++i) {
        if (!bd.block_is_complete[i]) continue;
        for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
          if (!bd.block_is_complete[j]) continue;
          std::vector<int> common;
          std::set_intersection(bd.blocks[i].begin(), bd.blocks[i].end(),
                                bd.blocks[j].begin(), bd.blocks[j].end(),
                                std::back_inserter(common));
          if (!common.empty()) {
            e.passed = false;
            e.witness = bd.blocks[i];
            e.witness.insert(e.witness.end(), bd.blocks[j].begin(),
                             bd.blocks[j].end());
            e.detail = "two complete blocks share vertex " +
                       std::to_string(common[0]);
            break;
          }
        }
      }
    }
    add(std::move(e));
  }

  {
    LemmaEntry e{.name = "no_h_patterns", .applicable = true};
    for (int k = 2; k < t && e.passed; ++k) {
      if (auto w = find_pattern(g, {k, t - k - 1})) {
        e.passed = false;
        e.witness = w->cycle;
        for (std::size_t i = 1; i < w->tail.size(); ++i)
          e.witness.push_back(w->tail[i]);
        e.detail = "contains H_{" + std::to_string(k) + "," +
                   std::to_string(t - k - 1) + "}";
      }
    }
    add(std::move(e));
  }

  {
    LemmaEntry e{.name = "no_long_even_cycles", .applicable = t >= 5};
    if (e.applicable) {
      for (int len : {2 * t - 2, 2 * t - 4}) {
        if (len > n) continue;
        if (auto cyc = find_cycle_of_length(g, len)) {
          e.passed = false;
          e.witness = *cyc;
          e.detail = "contains C_" + std::to_string(len);
          break;
        }
      }
    }
    add(std::move(e));
  }

  {
    LemmaEntry e{.name = "girth_bound", .applicable = t >= 5 && nontrivial};
    if (e.applicable) {
      auto gi = girth(g);
      if (!gi || *gi > t + 1) {
        e.passed = false;
        e.witness = detail::all_vertices(g);
        e.detail = gi ? "girth " + std::to_string(*gi) + " exceeds t+1"
                      : "acyclic graph has unbounded girth";
      }
    }
    add(std::move(e));
  }

  {
    LemmaEntry e{.name = "no_twins", .applicable = t >= 4};
    if (e.applicable) {
      if (auto tw = find_twins(g)) {
        e.passed = false;
        e.witness = {tw->first, tw->second};
        e.detail = "twins with equal open neighborhoods";
      }
    }
    add(std::move(e));
  }

  {
    LemmaEntry e{.name = "short_even_cycle_exists",
                 .applicable = t >= 6 && nontrivial};
    if (e.applicable) {
      auto len = shortest_even_cycle(g);
      if (!len || *len > 2 * t - 6) {
        e.passed = false;
        e.witness = detail::all_vertices(g);
        e.detail = "no even cycle of length at most " +
                   std::to_string(2 * t - 6);
      }
    }
    add(std::move(e));
  }

  // Lemma on (2t-6)-cycles: conditions on R = V(G) - V(C), checked on every
  // enumerated (2t-6)-cycle, with distances measured along that cycle.
  {
    int L = 2 * t - 6;
    bool in_range = t >= 7 && nontrivial && L >= 3 && L <= n;
    bool cycle_exists = in_range && has_cycle_of_length(g, L);
    LemmaEntry r_ind{.name = "c2t6_r_independent", .applicable = cycle_exists};
    LemmaEntry attach{.name = "c2t6_r_attachment", .applicable = cycle_exists};
    LemmaEntry uniform{.name = "c2t6_uniform_separation",
                       .applicable = cycle_exists};
    LemmaEntry chords{.name = "c2t6_even_chords", .applicable = cycle_exists};
    if (cycle_exists) {
      for_each_cycle_of_length(g, L, [&](const std::vector<int>& cyc) {
        std::array<int, kMaxVertices> pos{};
        std::uint64_t cyc_mask = 0;
        for (int i = 0; i < L; ++i) {
          pos[cyc[i]] = i;
          cyc_mask |= std::uint64_t{1} << cyc[i];
        }
        auto arc = [&](int a, int b) {
          int d = std::abs(pos[a] - pos[b]);
          return std::min(d, L - d);
        };
        std::uint64_t rmask = g.full_mask() & ~cyc_mask;
        if (r_ind.passed) {
          for_each_bit(rmask, [&](int u) {
            std::uint64_t inner = g.neighbors(u) & rmask & detail::bits_above(u);
            if (inner && r_ind.passed) {
              r_ind.passed = false;
              r_ind.witness = cyc;
              r_ind.witness.push_back(u);
              r_ind.witness.push_back(std::countr_zero(inner));
              r_ind.detail = "edge inside R";
            }
          });
        }
        int seen_sep = -1;
        for_each_bit(rmask, [&](int u) {
          std::uint64_t att = g.neighbors(u) & cyc_mask;
          if (std::popcount(att) != 2) {
            if (attach.passed) {
              attach.passed = false;
              attach.witness = cyc;
              attach.witness.push_back(u);
              attach.detail = "R-vertex with " +
                              std::to_string(std::popcount(att)) +
                              " neighbors on C";
            }
            return;
          }
          int a = std::countr_zero(att);
          int b = 63 - std::countl_zero(att);
          int sep = arc(a, b);
          if ((sep % 2 == 0 || sep < 3) && attach.passed) {
            attach.passed = false;
            attach.witness = cyc;
            attach.witness.insert(attach.witness.end(), {u, a, b});
            attach.detail = "separation " + std::to_string(sep) +
                            " not odd or below 3";
          }
          if (seen_sep < 0) {
            seen_sep = sep;
          } else if (sep != seen_sep && uniform.passed) {
            uniform.passed = false;
            uniform.witness = cyc;
            uniform.witness.push_back(u);
            uniform.detail = "separations " + std::to_string(seen_sep) +
                             " and " + std::to_string(sep) + " differ";
          }
        });
        if (chords.passed) {
          for (int i = 0; i < L && chords.passed; ++i) {
            for (int j = i + 1; j < L; ++j) {
              int d = std::min(j - i, L - (j - i));
              if (d >= 2 && g.has_edge(cyc[i], cyc[j]) && d % 2 != 0) {
                chords.passed = false;
                chords.witness = cyc;
                chords.witness.insert(chords.witness.end(), {cyc[i], cyc[j]});
                chords.detail = "chord at odd distance " + std::to_string(d);
                break;
              }
            }
          }
        }
        return r_ind.passed || attach.passed || uniform.passed ||
               chords.passed;
      });
    } else if (in_range) {
      const char* why = "no (2t-6)-cycle present";
      r_ind.detail = attach.detail = uniform.detail = chords.detail = why;
    }
    add(std::move(r_ind));
    add(std::move(attach));
    add(std::move(uniform));
    add(std::move(chords));
  }

  return rep;
}

}  // namespace ucsat
