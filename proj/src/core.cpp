#include "metrel/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "metrel/verification.hpp"

namespace metrel {

std::size_t CoordVector::zero_count() const {
  return static_cast<std::size_t>(std::count(coords_.begin(), coords_.end(), 0));
}

CoordVector CoordVector::shifted(std::int32_t delta) const {
  std::vector<std::int32_t> out(coords_);
  for (auto& c : out) c += delta;
  return CoordVector(std::move(out));
}

std::string CoordVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::int32_t chebyshev_distance(const CoordVector& x, const CoordVector& y) {
  if (x.dim() != y.dim()) {
    throw DimensionError("vectors " + x.to_string() + " and " + y.to_string() +
                         " have different lengths");
  }
  std::int32_t best = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    best = std::max(best, std::abs(x[i] - y[i]));
  }
  return best;
}

bool chebyshev_adjacent(const CoordVector& x, const CoordVector& y) {
  return chebyshev_distance(x, y) == 1;
}

VectorSet::VectorSet(std::vector<CoordVector> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error("vector set is empty");
  dim_ = elements_.front().dim();
  if (dim_ == 0) throw DimensionError("vectors must have at least one coordinate");
  for (const auto& x : elements_) {
    if (x.dim() != dim_) {
      throw DimensionError("vector " + x.to_string() + " has length " +
                           std::to_string(x.dim()) + ", expected " +
                           std::to_string(dim_));
    }
  }
  std::sort(elements_.begin(), elements_.end());
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end()) throw Error("duplicate vector " + dup->to_string());

  landmark_index_.assign(dim_, std::nullopt);
  std::vector<std::size_t> zeros(dim_, 0);
  for (std::size_t v = 0; v < elements_.size(); ++v) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (elements_[v][i] == 0) {
        ++zeros[i];
        landmark_index_[i] = v;
      }
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    if (zeros[i] != 1) landmark_index_[i].reset();
  }
}

std::optional<std::size_t> VectorSet::index_of(const CoordVector& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::vector<std::size_t>> VectorSet::landmarks() const {
  std::vector<std::size_t> out;
  out.reserve(dim_);
  for (const auto& l : landmark_index_) {
    if (!l) return std::nullopt;
    out.push_back(*l);
  }
  return out;
}

Graph::Graph(std::size_t order, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(order) {
  for (const auto& e : edges_) {
    if (e.first == e.second) throw Error("self-loop at vertex " + std::to_string(e.first));
    if (e.first > e.second) throw Error("edge endpoints must be ordered");
    if (e.second >= order) throw Error("edge endpoint " + std::to_string(e.second) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error("parallel edges are not allowed");
  }
  for (const auto& e : edges_) {
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u == v) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

std::vector<std::int32_t> bfs_distances(const Graph& g, std::size_t source) {
  if (source >= g.order()) throw Error("source vertex " + std::to_string(source) + " out of range");
  std::vector<std::int32_t> dist(g.order(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw Error("connectivity of the empty graph is undefined");
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

LabeledGraph::LabeledGraph(VectorSet vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), graph_(vertices_.size(), std::move(edges)) {}

namespace {

std::vector<Edge> resolve_edges(const VectorSet& set,
                                const std::vector<std::pair<CoordVector, CoordVector>>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [x, y] : edges) {
    auto u = set.index_of(x);
    auto v = set.index_of(y);
    if (!u) throw Error("edge endpoint " + x.to_string() + " is not a vertex");
    if (!v) throw Error("edge endpoint " + y.to_string() + " is not a vertex");
    if (*u == *v) throw Error("self-loop at " + x.to_string());
    out.push_back(make_edge(*u, *v));
  }
  return out;
}

}  // namespace

LabeledGraph::LabeledGraph(VectorSet vertices,
                           const std::vector<std::pair<CoordVector, CoordVector>>& edges)
    : LabeledGraph(vertices, resolve_edges(vertices, edges)) {}

bool LabeledGraph::has_edge(const CoordVector& x, const CoordVector& y) const {
  auto u = vertices_.index_of(x);
  auto v = vertices_.index_of(y);
  return u && v && graph_.has_edge(*u, *v);
}

Edge LabeledGraph::edge_between(const CoordVector& x, const CoordVector& y) const {
  auto u = vertices_.index_of(x);
  auto v = vertices_.index_of(y);
  if (!u) throw PreconditionError(x.to_string() + " is not a vertex");
  if (!v) throw PreconditionError(y.to_string() + " is not a vertex");
  if (*u == *v) throw PreconditionError("endpoints coincide at " + x.to_string());
  return make_edge(*u, *v);
}

LabeledGraph LabeledGraph::with_edge(const CoordVector& x, const CoordVector& y) const {
  auto e = edge_between(x, y);
  if (graph_.has_edge(e.first, e.second)) {
    throw PreconditionError("edge " + x.to_string() + "--" + y.to_string() + " already present");
  }
  auto edges = graph_.edges();
  edges.push_back(e);
  return LabeledGraph(vertices_, std::move(edges));
}

LabeledGraph LabeledGraph::without_edge(const CoordVector& x, const CoordVector& y) const {
  auto e = edge_between(x, y);
  auto edges = graph_.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw PreconditionError("edge " + x.to_string() + "--" + y.to_string() + " not present");
  }
  edges.erase(it);
  return LabeledGraph(vertices_, std::move(edges));
}

std::vector<std::int32_t> bfs_distances(const LabeledGraph& g, std::size_t source) {
  return bfs_distances(g.topology(), source);
}

bool is_connected(const LabeledGraph& g) { return is_connected(g.topology()); }

Realization Realization::from_graph(LabeledGraph graph) {
  auto landmarks = graph.vertices().landmarks();
  if (!landmarks) {
    throw PreconditionError("vertex set has no unique zero-holder for some coordinate");
  }
  auto report = verify_realization(graph, *landmarks, graph.vertices());
  if (!report.ok()) throw PreconditionError("graph is not a realization: " + report.describe());
  return Realization(std::move(graph), std::move(*landmarks));
}

}  // namespace metrel
