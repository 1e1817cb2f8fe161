// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WILDMAT_MULTIGRAPH_HPP
#define WILDMAT_MULTIGRAPH_HPP

#include <numeric>
#include <string>
#include <vector>

#include "wildmat/matroid.hpp"

namespace wildmat {

// Finite multigraph; loops and parallel edges allowed.
struct Multigraph {
  int nVertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edgeLabels;  // optional; e0.. when empty

  std::vector<std::string> labels_or_default() const {
    if (!edgeLabels.empty()) return edgeLabels;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
      out.push_back("e" + std::to_string(i));
    return out;
  }
};

namespace detail {
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false if x,y already joined
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};
}  // namespace detail

// Is the edge subset a forest? Loops are cycles of length one.
inline bool is_forest(const Multigraph& g, Mask subset) {
  detail::Dsu dsu(g.nVertices);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!(subset & (Mask(1) << i))) continue;
    auto [u, v] = g.edges[i];
    if (u == v || !dsu.unite(u, v)) return false;
  }
  return true;
}

inline int component_count(const Multigraph& g) {
  detail::Dsu dsu(g.nVertices);
  int comps = g.nVertices;
  for (auto [u, v] : g.edges)
    if (u != v && dsu.unite(u, v)) --comps;
  return comps;
}

inline bool is_connected(const Multigraph& g) {
  return g.nVertices <= 1 || component_count(g) == 1;
}

// Finite cycle matroid M_F(G): bases are the maximal spanning forests,
// circuits the cycles (loops and parallel pairs included).
inline FiniteMatroid finite_cycle_matroid(const Multigraph& g,
                                          int edgeBound = 16) {
  int m = static_cast<int>(g.edges.size());
  if (m > edgeBound)
    throw GroundTooLarge("finite_cycle_matroid: " + std::to_string(m) +
                         " edges exceed bound " + std::to_string(edgeBound));
  int rank = g.nVertices - component_count(g);
  std::vector<Mask> bases;
  Mask full = m == 0 ? 0 : ((Mask(1) << m) - 1);
  for (Mask s = 0; s <= full; ++s)
    if (popcount(s) == rank && is_forest(g, s)) bases.push_back(s);
  if (m == 0) bases.push_back(0);
  return FiniteMatroid(g.labels_or_default(), std::move(bases));
}

}  // namespace wildmat

#endif  // WILDMAT_MULTIGRAPH_HPP
