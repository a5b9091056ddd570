#pragma once

#include <stdexcept>

#include "ucsat/graph.hpp"

namespace ucsat {

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// K_{1,k}: hub 0, leaves 1..k.
inline Graph star_graph(int k) {
  if (k < 1) throw std::invalid_argument("star_graph: k < 1");
  Graph g(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

/// F_k: k triangles sharing the hub vertex 0.
inline Graph friendship_graph(int k) {
  if (k < 1) throw std::invalid_argument("friendship_graph: k < 1");
  Graph g(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    g.add_edge(0, a);
    g.add_edge(0, b);
    g.add_edge(a, b);
  }
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer pentagon
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

/// H_{m,ell}: a 2m-cycle with a pendant path of ell edges attached at one
/// cycle vertex. ell = 0 degenerates to the plain even cycle.
struct HPattern {
  int m = 2;
  int ell = 0;
};

inline Graph h_pattern_graph(const HPattern& p) {
  if (p.m < 2) throw std::invalid_argument("h_pattern_graph: m < 2");
  if (p.ell < 0) throw std::invalid_argument("h_pattern_graph: ell < 0");
  int c = 2 * p.m;
  Graph g(c + p.ell);
  for (int i = 0; i < c; ++i) g.add_edge(i, (i + 1) % c);
  for (int i = 0; i < p.ell; ++i) g.add_edge(i == 0 ? 0 : c + i - 1, c + i);
  return g;
}

}  // namespace ucsat
