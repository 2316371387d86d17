#pragma once

// Exact search over spanning subgraphs of the canonical graph. A subgraph
// realizes the set iff every descent demand (vertex u, coordinate i with
// u_i > 0) is covered by at least one present edge to a vertex z with
// z_i = u_i - 1, so the search is a set-cover over canonical edges.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "metrel/core.hpp"

namespace metrel::detail {

struct DescentDemand {
  VertexId vertex = 0;
  std::size_t coordinate = 0;
  std::vector<std::uint32_t> options;  // canonical edge ids
};

// Descent demands of a realizable set, indexed against its canonical edges.
class DescentModel {
 public:
  explicit DescentModel(const VectorSet& s);

  const VectorSet& set() const { return set_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<DescentDemand>& demands() const { return demands_; }
  const std::vector<std::uint32_t>& demands_of(std::uint32_t edge) const { return edge_demands_[edge]; }
  std::optional<std::uint32_t> edge_id(Edge e) const;

  // True iff every demand has an option with present[option] set.
  bool covers(const std::vector<bool>& present) const;

  // Edge ids that are the only option of some demand, ascending.
  std::vector<std::uint32_t> forced() const;

  std::vector<Edge> select(const std::vector<bool>& present) const;

 private:
  VectorSet set_;
  std::vector<Edge> edges_;
  std::vector<DescentDemand> demands_;
  std::vector<std::vector<std::uint32_t>> edge_demands_;
};

enum class EdgeStatus : std::uint8_t { kFree, kIn, kOut };

// Partial decision over canonical edges. Copyable; the search copies it per
// branch.
class SearchState {
 public:
  explicit SearchState(const DescentModel& model);

  void include(std::uint32_t e);
  void exclude(std::uint32_t e);

  // Includes the sole remaining option of any uncovered demand until
  // fixpoint. False if some uncovered demand has no option left.
  bool propagate();

  bool complete() const { return uncovered_ == 0; }
  std::size_t included() const { return included_; }
  EdgeStatus status(std::uint32_t e) const { return status_[e]; }

  // included() plus a packing of uncovered demands with pairwise disjoint
  // free options; each packed demand needs its own edge.
  std::size_t lower_bound() const;

  // Free edge covering the most uncovered demands; smallest id on ties.
  std::optional<std::uint32_t> branch_edge() const;

  // Included edges; free edges count as absent.
  std::vector<bool> present() const;

 private:
  const DescentModel* model_;
  std::vector<EdgeStatus> status_;
  std::vector<std::uint32_t> covered_;
  std::vector<std::uint32_t> alive_;
  std::size_t uncovered_ = 0;
  std::size_t included_ = 0;
};

// Children of a node in the branching tree, include-branch first.
std::vector<SearchState> branch(const SearchState& state);

// Serial reference search.
namespace serial {

// Smallest edge count of a covering subgraph, given a feasible upper bound.
std::size_t minimum_count(const DescentModel& model, const SearchState& root, std::size_t upper_bound);

// Whether a completion of root with at most budget edges exists.
bool feasible(const DescentModel& model, const SearchState& root, std::size_t budget);

// Every covering edge set of size at most budget that extends root with
// free edges absent; budget must be the optimum so no solution contains
// another.
std::vector<std::vector<bool>> enumerate(const DescentModel& model, const SearchState& root,
                                         std::size_t budget);

}  // namespace serial

// OpenMP kernels: split the tree into a frontier of subtrees and search them
// on `workers` threads. Results equal the serial ones.
namespace parallel {

std::size_t minimum_count(const DescentModel& model, const SearchState& root, std::size_t upper_bound,
                          int workers);
bool feasible(const DescentModel& model, const SearchState& root, std::size_t budget, int workers);
std::vector<std::vector<bool>> enumerate(const DescentModel& model, const SearchState& root,
                                         std::size_t budget, int workers);

}  // namespace parallel

}  // namespace metrel::detail
