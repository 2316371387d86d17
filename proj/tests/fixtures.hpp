#pragma once

// Shared sets and independent oracles for the test suites. Nothing here calls
// into the realizability, minimization or trees modules.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "metrel/core.hpp"

namespace metrel::testing {

inline CoordVector v(std::initializer_list<std::int32_t> c) { return CoordVector(c); }

// Small example sets with known realizations.
inline VectorSet star_set() { return {{0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}; }
inline VectorSet canonical_example_set() { return {{0, 2}, {1, 1}, {2, 0}, {1, 2}, {2, 1}, {2, 2}}; }
inline VectorSet cycle_set() { return {{0, 2}, {1, 1}, {1, 3}, {2, 0}, {2, 4}, {3, 1}, {3, 3}, {4, 2}}; }
inline VectorSet twin_minimum_set() {
  return {{0, 2}, {1, 1}, {1, 3}, {2, 0}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {4, 2}};
}
inline VectorSet tree_set() { return {{0, 3}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}}; }
inline VectorSet unique_tree_set() { return {{0, 4}, {1, 3}, {2, 2}, {2, 4}, {3, 1}, {4, 0}, {4, 2}}; }

inline std::string format_set(const VectorSet& s) {
  std::string out = "{";
  for (const auto& x : s) out += x.to_string();
  return out + "}";
}

using CoordEdge = std::pair<CoordVector, CoordVector>;

inline std::vector<CoordEdge> coord_edges(const LabeledGraph& g) {
  std::vector<CoordEdge> out;
  for (const auto& e : g.edges()) out.emplace_back(g.label(e.first), g.label(e.second));
  return out;
}

// Plain BFS, kept separate from the library's.
inline std::vector<int> oracle_distances(std::size_t order, const std::vector<Edge>& edges, std::size_t source) {
  std::vector<std::vector<std::size_t>> adj(order);
  for (const auto& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<int> dist(order, -1);
  std::deque<std::size_t> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (auto w : adj[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

// Whether the graph on the set's elements with these edges has, for every
// coordinate i, a unique zero-holder w_i and d(u, w_i) = u_i for all u.
inline bool oracle_realizes(const std::vector<CoordVector>& set, const std::vector<Edge>& edges) {
  const auto n = set.front().dim();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t holders = 0, w = 0;
    for (std::size_t u = 0; u < set.size(); ++u) {
      if (set[u][i] == 0) {
        ++holders;
        w = u;
      }
    }
    if (holders != 1) return false;
    auto dist = oracle_distances(set.size(), edges, w);
    for (std::size_t u = 0; u < set.size(); ++u) {
      if (dist[u] != set[u][i]) return false;
    }
  }
  return true;
}

// Searches every graph on the set's elements for a realizing one. Only for
// tiny sets (2^(k(k-1)/2) graphs); adjacency is kept as bitmasks.
inline bool oracle_realizable(const std::vector<CoordVector>& set) {
  const auto order = set.size();
  const auto n = set.front().dim();
  std::vector<std::size_t> holder(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t holders = 0;
    for (std::size_t u = 0; u < order; ++u) {
      if (set[u][i] == 0) {
        ++holders;
        holder[i] = u;
      }
    }
    if (holders != 1) return false;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t w = u + 1; w < order; ++w) pairs.emplace_back(u, w);
  }
  std::vector<std::uint32_t> adj(order);
  std::vector<int> dist(order);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::fill(adj.begin(), adj.end(), 0u);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) {
        adj[pairs[k].first] |= 1u << pairs[k].second;
        adj[pairs[k].second] |= 1u << pairs[k].first;
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      // Level-by-level BFS from the zero-holder.
      std::fill(dist.begin(), dist.end(), -1);
      std::uint32_t frontier = 1u << holder[i], seen = frontier;
      for (int level = 0; frontier; ++level) {
        std::uint32_t next = 0;
        for (std::size_t u = 0; u < order; ++u) {
          if ((frontier >> u) & 1u) {
            dist[u] = level;
            next |= adj[u];
          }
        }
        frontier = next & ~seen;
        seen |= next;
      }
      for (std::size_t u = 0; u < order && ok; ++u) ok = dist[u] == set[u][i];
    }
    if (ok) return true;
  }
  return false;
}

// Random connected graph: a random spanning tree plus extra edges.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t order, double extra_density) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < order; ++v) edges.push_back(make_edge(v, rng() % v));
  std::bernoulli_distribution extra(extra_density);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t w = u + 1; w < order; ++w) {
      bool present = false;
      for (const auto& e : edges) present |= e == make_edge(u, w);
      if (!present && extra(rng)) edges.push_back(make_edge(u, w));
    }
  }
  return Graph(order, std::move(edges));
}

// Metric representations of a graph with respect to landmarks, via the
// oracle BFS; empty if two vertices clash.
inline std::vector<CoordVector> oracle_representations(const Graph& g, const std::vector<std::size_t>& landmarks) {
  std::vector<std::vector<std::int32_t>> coords(g.order());
  for (auto w : landmarks) {
    auto dist = oracle_distances(g.order(), g.edges(), w);
    for (std::size_t u = 0; u < g.order(); ++u) coords[u].push_back(dist[u]);
  }
  std::vector<CoordVector> out;
  for (auto& c : coords) out.emplace_back(std::move(c));
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return out;
}

// A realizable set drawn as the coordinates of a random connected graph with
// respect to random landmarks. Retries until the landmarks resolve.
inline VectorSet random_realizable_set(std::mt19937_64& rng, std::size_t max_order, std::size_t max_dim) {
  for (;;) {
    auto order = 1 + rng() % max_order;
    auto dim = 1 + rng() % std::min(max_dim, order);
    auto g = random_connected_graph(rng, order, 0.15 + 0.35 * static_cast<double>(rng() % 100) / 100.0);
    std::vector<std::size_t> pool(order);
    for (std::size_t k = 0; k < order; ++k) pool[k] = k;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::size_t> landmarks(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(dim));
    auto reps = oracle_representations(g, landmarks);
    if (!reps.empty()) return VectorSet(std::move(reps));
  }
}

}  // namespace metrel::testing
