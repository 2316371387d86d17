#include "metrel/verification.hpp"

#include <algorithm>
#include <map>

namespace metrel {

std::string VerificationReport::describe() const {
  switch (status) {
    case Status::kOk:
      return "ok";
    case Status::kDisconnected:
      return "graph is disconnected";
    case Status::kMismatch:
      break;
  }
  return "vertex " + vertex.to_string() + ", landmark " + std::to_string(landmark + 1) +
         ": expected distance " + std::to_string(expected) + ", got " +
         (actual == kUnreachable ? std::string("unreachable") : std::to_string(actual));
}

VerificationReport verify_realization(const LabeledGraph& g,
                                      const std::vector<std::size_t>& landmarks,
                                      const VectorSet& s) {
  if (landmarks.size() != s.dim()) {
    throw DimensionError("expected " + std::to_string(s.dim()) + " landmarks, got " +
                         std::to_string(landmarks.size()));
  }
  if (!(g.vertices() == s)) throw DimensionError("graph vertex set differs from the vector set");

  VerificationReport report;
  if (!is_connected(g)) {
    report.status = VerificationReport::Status::kDisconnected;
    return report;
  }
  for (std::size_t i = 0; i < landmarks.size(); ++i) {
    auto dist = bfs_distances(g, landmarks[i]);
    for (std::size_t u = 0; u < s.size(); ++u) {
      if (dist[u] != s[u][i]) {
        report.status = VerificationReport::Status::kMismatch;
        report.vertex = s[u];
        report.landmark = i;
        report.expected = s[u][i];
        report.actual = dist[u];
        return report;
      }
    }
  }
  return report;
}

std::vector<CoordVector> metric_representations(const Graph& g,
                                                const std::vector<std::size_t>& landmarks) {
  if (landmarks.empty()) throw PreconditionError("landmark list is empty");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  std::vector<std::vector<std::int32_t>> coords(g.order());
  for (auto w : landmarks) {
    auto dist = bfs_distances(g, w);
    for (std::size_t u = 0; u < g.order(); ++u) coords[u].push_back(dist[u]);
  }
  std::vector<CoordVector> out;
  out.reserve(g.order());
  for (auto& c : coords) out.emplace_back(std::move(c));
  return out;
}

namespace {

// First pair of vertices sharing a representation, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_clash(const std::vector<CoordVector>& reps) {
  std::map<CoordVector, std::size_t> seen;
  for (std::size_t u = 0; u < reps.size(); ++u) {
    auto [it, inserted] = seen.emplace(reps[u], u);
    if (!inserted) return std::pair{it->second, u};
  }
  return std::nullopt;
}

}  // namespace

bool is_resolving_set(const Graph& g, const std::vector<std::size_t>& landmarks) {
  return !find_clash(metric_representations(g, landmarks)).has_value();
}

Realization project_to_canonical(const Graph& g, const std::vector<std::size_t>& landmarks) {
  auto reps = metric_representations(g, landmarks);
  if (auto clash = find_clash(reps)) {
    throw PreconditionError("landmarks do not resolve vertices " + std::to_string(clash->first) +
                            " and " + std::to_string(clash->second) + " (both " +
                            reps[clash->first].to_string() + ")");
  }
  VectorSet set(reps);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    edges.push_back(make_edge(*set.index_of(reps[e.first]), *set.index_of(reps[e.second])));
  }
  return Realization::from_graph(LabeledGraph(std::move(set), std::move(edges)));
}

bool are_equivalent(const Realization& a, const Realization& b) {
  if (!(a.set() == b.set())) {
    throw PreconditionError("realizations are of different vector sets");
  }
  return a.graph().edges() == b.graph().edges();
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), map_(a.order(), -1), used_(b.order()) {
    // Visit high-degree vertices first; they constrain the most.
    for (std::size_t v = 0; v < a.order(); ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](auto x, auto y) { return a.degree(x) > a.degree(y); });
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    auto u = order_[depth];
    for (std::size_t v = 0; v < b_.order(); ++v) {
      if (used_[v] || b_.degree(v) != a_.degree(u) || !consistent(u, v, depth)) continue;
      map_[u] = static_cast<int>(v);
      used_[v] = true;
      if (extend(depth + 1)) return true;
      used_[v] = false;
      map_[u] = -1;
    }
    return false;
  }

  bool consistent(std::size_t u, std::size_t v, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      auto w = order_[k];
      if (a_.has_edge(u, w) != b_.has_edge(v, static_cast<std::size_t>(map_[w]))) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::size_t> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool are_isomorphic_small(const Graph& a, const Graph& b) {
  if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder) {
    throw PreconditionError("isomorphism test is limited to graphs with at most " +
                            std::to_string(kMaxIsomorphismOrder) + " vertices");
  }
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return IsomorphismSearch(a, b).run();
}

}  // namespace metrel
