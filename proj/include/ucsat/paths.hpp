#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ucsat/graph.hpp"

namespace ucsat {

namespace detail {

inline std::uint64_t bits_above(int v) {
  return v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1);
}

}  // namespace detail

/// Number of paths on exactly k distinct vertices from u to v (each
/// undirected path counted once: enumeration runs from u, so the two
/// traversals of a path collapse to one).
inline std::uint64_t count_paths_between(const Graph& g, int u, int v, int k) {
  int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::out_of_range("count_paths_between: vertex out of range");
  if (u == v)
    throw std::invalid_argument("count_paths_between: endpoints must differ");
  if (k < 2 || k > n)
    throw std::invalid_argument("count_paths_between: k out of [2, n]");
  std::uint64_t vbit = std::uint64_t{1} << v;
  std::uint64_t count = 0;
  // Iterative DFS over partial paths; stack slot per depth.
  std::array<std::uint64_t, kMaxVertices> cand{};
  std::array<int, kMaxVertices> cur{};
  std::array<std::uint64_t, kMaxVertices> used{};
  int depth = 0;
  cur[0] = u;
  used[0] = std::uint64_t{1} << u;
  auto candidates = [&](int at, int d) -> std::uint64_t {
    std::uint64_t c = g.neighbors(at) & ~used[d];
    if (d + 2 == k) return c & vbit;  // final step must land on v
    return c & ~vbit;                 // v may appear only last
  };
  cand[0] = candidates(u, 0);
  while (depth >= 0) {
    if (depth + 2 == k) {
      count += (cand[depth] >> v) & 1u;
      cand[depth] = 0;
    }
    if (!cand[depth]) {
      --depth;
      continue;
    }
    int w = std::countr_zero(cand[depth]);
    cand[depth] &= cand[depth] - 1;
    ++depth;
    cur[depth] = w;
    used[depth] = used[depth - 1] | (std::uint64_t{1} << w);
    cand[depth] = candidates(w, depth);
  }
  return count;
}

/// Visits every cycle of length L exactly once (anchored at its minimum
/// vertex, direction fixed by second < last). fn receives the vertex
/// sequence and returns false to stop early. Returns true if stopped early.
template <typename Fn>
inline bool for_each_cycle_of_length(const Graph& g, int L, Fn&& fn) {
  int n = g.order();
  if (L < 3 || L > n)
    throw std::invalid_argument("cycle length out of [3, n]");
  std::array<int, kMaxVertices> path{};
  std::array<std::uint64_t, kMaxVertices> cand{};
  for (int a = 0; a + L <= n; ++a) {  // min vertex of the cycle
    std::uint64_t allowed = detail::bits_above(a);
    path[0] = a;
    int depth = 0;  // path[0..depth] fixed
    std::uint64_t used = std::uint64_t{1} << a;
    cand[0] = g.neighbors(a) & allowed;
    while (depth >= 0) {
      if (!cand[depth]) {
        --depth;
        if (depth >= 0) used &= ~(std::uint64_t{1} << path[depth + 1]);
        continue;
      }
      int w = std::countr_zero(cand[depth]);
      cand[depth] &= cand[depth] - 1;
      path[depth + 1] = w;
      if (depth + 1 == L - 1) {
        // closing vertex: must neighbor the anchor, direction fix applied
        if (((g.neighbors(w) >> a) & 1u) && path[1] < w) {
          if (!fn(std::vector<int>(path.begin(), path.begin() + L)))
            return true;
        }
        continue;
      }
      ++depth;
      used |= std::uint64_t{1} << w;
      std::uint64_t next = g.neighbors(w) & allowed & ~used;
      if (depth + 1 == L - 1) next &= g.neighbors(a);
      cand[depth] = next;
    }
  }
  return false;
}

/// True iff g contains C_L as a (not necessarily induced) subgraph.
inline bool has_cycle_of_length(const Graph& g, int L) {
  return for_each_cycle_of_length(g, L, [](const std::vector<int>&) {
    return false;  // stop at the first cycle
  });
}

/// Witness vertex sequence for the first C_L found, if any.
inline std::optional<std::vector<int>> find_cycle_of_length(const Graph& g,
                                                            int L) {
  std::optional<std::vector<int>> out;
  for_each_cycle_of_length(g, L, [&](const std::vector<int>& cyc) {
    out = cyc;
    return false;
  });
  return out;
}

/// True iff some cycle of length L passes through vertex v. Used by the
/// search to test patterns that must involve a freshly added vertex.
inline bool has_cycle_of_length_through(const Graph& g, int L, int v) {
  int n = g.order();
  if (L < 3 || L > n) throw std::invalid_argument("cycle length out of [3, n]");
  if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
  std::array<int, kMaxVertices> path{};
  std::array<std::uint64_t, kMaxVertices> cand{};
  path[0] = v;
  int depth = 0;
  std::uint64_t used = std::uint64_t{1} << v;
  cand[0] = g.neighbors(v);
  while (depth >= 0) {
    if (!cand[depth]) {
      --depth;
      if (depth >= 0) used &= ~(std::uint64_t{1} << path[depth + 1]);
      continue;
    }
    int w = std::countr_zero(cand[depth]);
    cand[depth] &= cand[depth] - 1;
    path[depth + 1] = w;
    if (depth + 1 == L - 1) {
      if (((g.neighbors(w) >> v) & 1u) && path[1] < w) return true;
      continue;
    }
    ++depth;
    used |= std::uint64_t{1} << w;
    std::uint64_t next = g.neighbors(w) & ~used;
    if (depth + 1 == L - 1) next &= g.neighbors(v);
    cand[depth] = next;
  }
  return false;
}

/// Minimum cycle length, or empty for forests. BFS from every root; the
/// shortest closing edge seen from a root on a shortest cycle is exact.
inline std::optional<int> girth(const Graph& g) {
  int n = g.order();
  int best = n + 1;
  for (int r = 0; r < n; ++r) {
    std::array<int, kMaxVertices> dist{};
    std::array<int, kMaxVertices> parent{};
    dist.fill(-1);
    parent.fill(-1);
    std::array<int, kMaxVertices> queue{};
    int qh = 0, qt = 0;
    queue[qt++] = r;
    dist[r] = 0;
    while (qh < qt) {
      int x = queue[qh++];
      if (2 * dist[x] >= best) break;
      for_each_bit(g.neighbors(x), [&](int y) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue[qt++] = y;
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      });
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

/// Minimum even cycle length, or empty when only odd cycles (or none) exist.
inline std::optional<int> shortest_even_cycle(const Graph& g) {
  for (int L = 4; L <= g.order(); L += 2)
    if (has_cycle_of_length(g, L)) return L;
  return std::nullopt;
}

}  // namespace ucsat
