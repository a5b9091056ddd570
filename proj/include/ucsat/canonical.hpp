#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "ucsat/graph.hpp"
#include "ucsat/graph6.hpp"

namespace ucsat {

/// Canonical graph6 bytes of a canonically relabeled copy. Two graphs have
/// equal CanonicalForm exactly when they are isomorphic.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

// Equitable-refinement + individualization search for the lexicographically
// least relabeled adjacency matrix. Cells are contiguous ranges of lab[];
// is_start marks range boundaries. All choices (splitter order, fragment
// order, target cell) are positional, so the result is label-invariant.
class Canonizer {
  // total fragment pushes per refine call is bounded by 2n + 2
  static constexpr int kQueueCap = 2 * kMaxVertices + 4;

 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
  }

  void run(std::array<std::uint64_t, kMaxVertices>& best_rows) {
    State root;
    for (int i = 0; i < n_; ++i) root.lab[i] = i;
    root.is_start.fill(false);
    root.is_start[0] = true;
    root.is_start[n_] = true;
    have_best_ = false;
    int queue[kQueueCap];
    queue[0] = 0;
    refine(root, queue, 1);
    recurse(root);
    best_rows = best_;
  }

 private:
  struct State {
    std::array<int, kMaxVertices> lab;
    std::array<bool, kMaxVertices + 1> is_start;
  };

  std::uint64_t cell_mask(const State& s, int begin, int end) const {
    std::uint64_t m = 0;
    for (int i = begin; i < end; ++i) m |= std::uint64_t{1} << s.lab[i];
    return m;
  }

  // Refines to the coarsest equitable partition below the current one.
  // queue holds cell start positions still to be used as splitters.
  void refine(State& s, int* queue, int qlen) const {
    bool queued[kMaxVertices] = {};
    for (int i = 0; i < qlen; ++i) queued[queue[i]] = true;
    int head = 0;
    while (head < qlen) {
      int sp = queue[head++];
      queued[sp] = false;
      int se = sp + 1;
      while (!s.is_start[se]) ++se;
      std::uint64_t splitter = cell_mask(s, sp, se);
      for (int cb = 0; cb < n_;) {
        int ce = cb + 1;
        while (!s.is_start[ce]) ++ce;
        if (ce - cb > 1) {
          int keys[kMaxVertices];
          int kmin = 64, kmax = 0;
          for (int i = cb; i < ce; ++i) {
            keys[i] = std::popcount(adj_[s.lab[i]] & splitter);
            kmin = std::min(kmin, keys[i]);
            kmax = std::max(kmax, keys[i]);
          }
          if (kmin != kmax) {
            // counting sort of lab[cb..ce) by key, new fragment per key value
            int count[kMaxVertices + 1] = {};
            for (int i = cb; i < ce; ++i) ++count[keys[i]];
            int cursor[kMaxVertices + 1];
            int acc = cb;
            for (int k = kmin; k <= kmax; ++k) {
              cursor[k] = acc;
              acc += count[k];
            }
            int labtmp[kMaxVertices];
            for (int i = cb; i < ce; ++i) labtmp[cursor[keys[i]]++] = s.lab[i];
            for (int i = cb; i < ce; ++i) s.lab[i] = labtmp[i];
            acc = cb;
            for (int k = kmin; k <= kmax; ++k) {
              if (count[k] == 0) continue;
              s.is_start[acc] = true;
              if (!queued[acc]) {
                queue[qlen++] = acc;
                queued[acc] = true;
              }
              acc += count[k];
            }
          }
        }
        cb = ce;
      }
    }
  }

  void recurse(const State& s) {
    // first non-singleton cell, positional
    int tb = -1, te = -1;
    for (int cb = 0; cb < n_;) {
      int ce = cb + 1;
      while (!s.is_start[ce]) ++ce;
      if (ce - cb > 1) {
        tb = cb;
        te = ce;
        break;
      }
      cb = ce;
    }
    if (tb < 0) {
      score_leaf(s);
      return;
    }
    for (int i = tb; i < te; ++i) {
      State child = s;
      std::swap(child.lab[tb], child.lab[i]);
      child.is_start[tb + 1] = true;
      int queue[kQueueCap];
      queue[0] = tb;
      queue[1] = tb + 1;
      refine(child, queue, 2);
      recurse(child);
    }
  }

  void score_leaf(const State& s) {
    // position of each vertex under this labeling
    int pos[kMaxVertices];
    for (int i = 0; i < n_; ++i) pos[s.lab[i]] = i;
    std::array<std::uint64_t, kMaxVertices> rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = 0;
      for_each_bit(adj_[s.lab[i]],
                   [&](int w) { row |= std::uint64_t{1} << pos[w]; });
      rows[i] = row;
    }
    if (!have_best_) {
      best_ = rows;
      have_best_ = true;
      return;
    }
    for (int i = 0; i < n_; ++i) {
      if (rows[i] < best_[i]) {
        best_ = rows;
        return;
      }
      if (rows[i] > best_[i]) return;
    }
  }

  const Graph& g_;
  int n_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
  std::array<std::uint64_t, kMaxVertices> best_{};
  bool have_best_ = false;
};

}  // namespace detail

/// Canonically relabeled copy of g. Equal across all relabelings of g.
inline Graph canonical_graph(const Graph& g) {
  std::array<std::uint64_t, kMaxVertices> rows{};
  detail::Canonizer(g).run(rows);
  Graph out(g.order());
  for (int i = 0; i < g.order(); ++i)
    for_each_bit(rows[i], [&](int j) {
      if (j > i) out.add_edge(i, j);
    });
  return out;
}

/// Canonical graph6 bytes (requires n <= 62, the graph6 short-form range).
inline CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{encode_graph6(canonical_graph(g))};
}

/// Packs the canonical upper triangle into one word; requires n <= 11.
inline std::uint64_t canonical_code64(const Graph& g) {
  if (g.order() > 11)
    throw std::invalid_argument("canonical_code64: order exceeds 11");
  Graph c = canonical_graph(g);
  std::uint64_t code = 0;
  int bit = 0;
  for (int v = 1; v < c.order(); ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (c.has_edge(u, v)) code |= std::uint64_t{1} << bit;
  return code;
}

}  // namespace ucsat
