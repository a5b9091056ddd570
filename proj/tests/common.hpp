#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "ucsat/graph.hpp"

namespace testutil {

inline oracle::OGraph to_oracle(const ucsat::Graph& g) {
  oracle::OGraph og = oracle::make(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) oracle::add_edge(og, u, v);
  return og;
}

inline ucsat::Graph from_oracle(const oracle::OGraph& og) {
  ucsat::Graph g(og.n);
  for (int u = 0; u < og.n; ++u)
    for (int v = u + 1; v < og.n; ++v)
      if (og.adj[u][v]) g.add_edge(u, v);
  return g;
}

inline ucsat::Graph graph_from_mask(int n, std::uint64_t mask) {
  return from_oracle(oracle::from_mask(n, mask));
}

inline ucsat::Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  ucsat::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

inline ucsat::Graph shuffled(const ucsat::Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  ucsat::Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace testutil
