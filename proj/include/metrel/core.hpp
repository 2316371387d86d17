#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metrel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of different lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input that does not satisfy its contract
// (non-realizable set, missing edge, size limit, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (vector-set, graph or DIMACS files).
class FormatError : public Error {
 public:
  using Error::Error;
};

// One element of a coordinate set: the distances of a vertex to each landmark.
class CoordVector {
 public:
  CoordVector() = default;
  explicit CoordVector(std::vector<std::int32_t> coords) : coords_(std::move(coords)) {}
  CoordVector(std::initializer_list<std::int32_t> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  std::int32_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int32_t> coords() const { return coords_; }

  // Number of zero entries.
  std::size_t zero_count() const;

  // x - 1 and x + 1, componentwise.
  CoordVector shifted(std::int32_t delta) const;

  // "(0,2)"
  std::string to_string() const;

  friend auto operator<=>(const CoordVector&, const CoordVector&) = default;
  friend bool operator==(const CoordVector&, const CoordVector&) = default;

 private:
  std::vector<std::int32_t> coords_;
};

// max_i |x_i - y_i|
std::int32_t chebyshev_distance(const CoordVector& x, const CoordVector& y);

// True iff max_i |x_i - y_i| == 1.
bool chebyshev_adjacent(const CoordVector& x, const CoordVector& y);

// A finite set of distinct coordinate vectors of a common dimension, stored in
// lexicographic order. Positions in that order are the vertex indices used by
// every graph built over the set.
//
// Admission checks only structure (common dimension >= 1, no duplicates,
// entries within 32-bit range). Sign and zero-count conditions are the
// business of check_realizable, which reports them as violations.
class VectorSet {
 public:
  VectorSet() = default;
  explicit VectorSet(std::vector<CoordVector> elements);
  VectorSet(std::initializer_list<CoordVector> elements)
      : VectorSet(std::vector<CoordVector>(elements)) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const CoordVector& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<CoordVector>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::optional<std::size_t> index_of(const CoordVector& x) const;
  bool contains(const CoordVector& x) const { return index_of(x).has_value(); }

  // Index of the unique element whose i-th coordinate is 0, if there is
  // exactly one.
  std::optional<std::size_t> landmark(std::size_t coordinate) const {
    return landmark_index_[coordinate];
  }

  // All landmarks, in coordinate order; nullopt unless every coordinate has
  // exactly one zero-holder.
  std::optional<std::vector<std::size_t>> landmarks() const;

  friend bool operator==(const VectorSet& a, const VectorSet& b) {
    return a.dim_ == b.dim_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<CoordVector> elements_;
  std::vector<std::optional<std::size_t>> landmark_index_;
};

using VertexId = std::uint32_t;

// Undirected edge with first < second.
struct Edge {
  VertexId first = 0;
  VertexId second = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(std::size_t u, std::size_t v) {
  return u < v ? Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)}
               : Edge{static_cast<VertexId>(v), static_cast<VertexId>(u)};
}

// Simple undirected graph over vertices 0..order-1. Edges are kept sorted and
// unique; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool has_edge(std::size_t u, std::size_t v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

inline constexpr std::int32_t kUnreachable = -1;

// Hop distances from source; kUnreachable for other components.
std::vector<std::int32_t> bfs_distances(const Graph& g, std::size_t source);

bool is_connected(const Graph& g);

// A graph whose vertices are the elements of a VectorSet.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(VectorSet vertices, std::vector<Edge> edges);
  // Edges given by endpoint coordinates; both endpoints must be in the set.
  LabeledGraph(VectorSet vertices,
               const std::vector<std::pair<CoordVector, CoordVector>>& edges);

  const VectorSet& vertices() const { return vertices_; }
  const Graph& topology() const { return graph_; }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  const CoordVector& label(std::size_t v) const { return vertices_[v]; }

  bool has_edge(const CoordVector& x, const CoordVector& y) const;
  Edge edge_between(const CoordVector& x, const CoordVector& y) const;

  LabeledGraph with_edge(const CoordVector& x, const CoordVector& y) const;
  LabeledGraph without_edge(const CoordVector& x, const CoordVector& y) const;

 private:
  VectorSet vertices_;
  Graph graph_;
};

std::vector<std::int32_t> bfs_distances(const LabeledGraph& g, std::size_t source);
bool is_connected(const LabeledGraph& g);

// A labeled graph together with its landmarks (the zero-holders of each
// coordinate, in coordinate order). Only constructible from a graph in which
// every vertex's distances to the landmarks equal its label.
class Realization {
 public:
  // Throws PreconditionError if the graph does not realize its vertex set.
  static Realization from_graph(LabeledGraph graph);

  const LabeledGraph& graph() const { return graph_; }
  const VectorSet& set() const { return graph_.vertices(); }
  const std::vector<std::size_t>& landmarks() const { return landmarks_; }
  std::size_t edge_count() const { return graph_.edge_count(); }

  friend bool operator==(const Realization& a, const Realization& b) {
    return a.set() == b.set() && a.graph_.edges() == b.graph_.edges();
  }

 private:
  Realization(LabeledGraph graph, std::vector<std::size_t> landmarks)
      : graph_(std::move(graph)), landmarks_(std::move(landmarks)) {}

  LabeledGraph graph_;
  std::vector<std::size_t> landmarks_;
};

}  // namespace metrel
