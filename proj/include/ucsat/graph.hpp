#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ucsat {

/// Hard capacity: one 64-bit adjacency row per vertex.
inline constexpr int kMaxVertices = 64;

/// Iterates the set bits of mask (ascending).
template <typename Fn>
inline void for_each_bit(std::uint64_t mask, Fn&& fn) {
  while (mask) {
    int v = std::countr_zero(mask);
    fn(v);
    mask &= mask - 1;
  }
}

/// Simple undirected graph on vertices 0..n-1 with bit-mask adjacency rows.
/// Invariants maintained by every mutator: symmetric adjacency, no loops,
/// no bits at or above n.
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("Graph: vertex count must be in [1, 64]");
  }

  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  bool is_complete() const {
    for (int v = 0; v < n_; ++v)
      if (degree(v) != n_ - 1) return false;
    return true;
  }

  /// Mask with bits 0..n-1 set.
  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (adj_[v] != other.adj_[v]) return false;
    return true;
  }

  /// Copy with one appended vertex whose neighborhood is nbrs.
  Graph with_vertex(std::uint64_t nbrs) const {
    if (n_ >= kMaxVertices)
      throw std::invalid_argument("Graph: capacity exceeded");
    if (nbrs & ~full_mask())
      throw std::invalid_argument("Graph: neighbor mask out of range");
    Graph g(n_ + 1);
    g.adj_ = adj_;
    g.adj_[n_] = nbrs;
    for_each_bit(nbrs, [&](int v) { g.adj_[v] |= std::uint64_t{1} << n_; });
    return g;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  int n_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

inline std::vector<int> bits_to_vector(std::uint64_t mask) {
  std::vector<int> out;
  for_each_bit(mask, [&](int v) { out.push_back(v); });
  return out;
}

/// Vertices reachable from start, as a bit mask.
inline std::uint64_t reachable_mask(const Graph& g, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  return reachable_mask(g, 0) == g.full_mask();
}

/// BFS distance; empty when u and v are in different components.
inline std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::out_of_range("distance: vertex out of range");
  if (u == v) return 0;
  std::uint64_t seen = std::uint64_t{1} << u;
  std::uint64_t frontier = seen;
  int d = 0;
  while (frontier) {
    ++d;
    std::uint64_t next = 0;
    for_each_bit(frontier, [&](int w) { next |= g.neighbors(w); });
    next &= ~seen;
    if ((next >> v) & 1u) return d;
    seen |= next;
    frontier = next;
  }
  return std::nullopt;
}

/// Longest shortest path; empty when disconnected.
inline std::optional<int> diameter(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  int best = 0;
  for (int u = 0; u < g.order(); ++u) {
    // full BFS from u
    std::uint64_t seen = std::uint64_t{1} << u;
    std::uint64_t frontier = seen;
    int d = 0;
    while (frontier) {
      std::uint64_t next = 0;
      for_each_bit(frontier, [&](int w) { next |= g.neighbors(w); });
      frontier = next & ~seen;
      seen |= next;
      if (frontier) ++d;
    }
    best = std::max(best, d);
  }
  return best;
}

namespace detail {

// Tarjan lowpoint scan; returns true if some vertex disconnects g.
// Assumes g connected.
inline bool has_cut_vertex(const Graph& g) {
  int n = g.order();
  std::array<int, kMaxVertices> disc{}, low{}, parent{};
  disc.fill(0);
  parent.fill(-1);
  int timer = 1;
  // Iterative DFS from 0.
  std::array<int, kMaxVertices> stack{}, child_count{};
  std::array<std::uint64_t, kMaxVertices> todo{};
  int top = 0;
  stack[top] = 0;
  disc[0] = low[0] = timer++;
  todo[0] = g.neighbors(0);
  child_count.fill(0);
  int root_children = 0;
  while (top >= 0) {
    int v = stack[top];
    if (todo[v]) {
      int w = std::countr_zero(todo[v]);
      todo[v] &= todo[v] - 1;
      if (!disc[w]) {
        parent[w] = v;
        if (v == 0) ++root_children;
        disc[w] = low[w] = timer++;
        todo[w] = g.neighbors(w);
        stack[++top] = w;
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      --top;
      if (top >= 0) {
        int p = stack[top];
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) return true;
      }
    }
  }
  return root_children > 1;
}

}  // namespace detail

/// n >= 3, connected, and no cut vertex.
inline bool is_two_connected(const Graph& g) {
  if (g.order() < 3) return false;
  if (!is_connected(g)) return false;
  return !detail::has_cut_vertex(g);
}

/// Subgraph induced on the given vertices, relabeled 0..k-1 in list order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

/// Non-edges {u, v}, u < v, in lexicographic order.
inline std::vector<std::pair<int, int>> complement_non_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

}  // namespace ucsat
