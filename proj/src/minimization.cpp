#include "metrel/minimization.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "descent_search.hpp"
#include "metrel/realizability.hpp"

namespace metrel {

using detail::DescentModel;
using detail::SearchState;

bool addable_edge(const Realization& r, const CoordVector& x, const CoordVector& y) {
  if (r.graph().has_edge(x, y)) {
    throw PreconditionError("edge " + x.to_string() + "--" + y.to_string() + " already present");
  }
  r.graph().edge_between(x, y);  // both endpoints must be vertices
  return chebyshev_adjacent(x, y);
}

namespace {

// For every coordinate where `low` is one below `high`, some other neighbour
// of `high` must share low's value there.
bool has_alternative_descent(const LabeledGraph& g, std::size_t low, std::size_t high) {
  const auto& lo = g.label(low);
  const auto& hi = g.label(high);
  for (std::size_t i = 0; i < lo.dim(); ++i) {
    if (lo[i] != hi[i] - 1) continue;
    auto nbrs = g.topology().neighbors(high);
    bool found = std::any_of(nbrs.begin(), nbrs.end(), [&](VertexId z) {
      return z != low && g.label(z)[i] == lo[i];
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool removable_edge(const Realization& r, const CoordVector& x, const CoordVector& y) {
  const auto& g = r.graph();
  if (!g.has_edge(x, y)) {
    throw PreconditionError("edge " + x.to_string() + "--" + y.to_string() + " not present");
  }
  auto u = *g.vertices().index_of(x);
  auto v = *g.vertices().index_of(y);
  return has_alternative_descent(g, u, v) && has_alternative_descent(g, v, u);
}

bool descent_realizes(const VectorSet& s, const std::vector<Edge>& edges) {
  DescentModel model(s);
  std::vector<bool> present(model.edges().size(), false);
  for (const auto& e : edges) {
    auto id = model.edge_id(e);
    if (!id) {
      throw PreconditionError("edge " + s[e.first].to_string() + "--" + s[e.second].to_string() +
                              " is not in the canonical graph");
    }
    present[*id] = true;
  }
  return model.covers(present);
}

namespace {

std::vector<std::uint32_t> scan_order(std::size_t count, std::uint64_t seed) {
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  if (seed == 0 || count < 2) return order;
  std::mt19937_64 rng(seed);
  for (std::size_t i = count - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

// Drops every removable edge in the given scan order. An edge that is not
// removable never becomes removable later, since removals only shrink the
// option sets, so one pass reaches a minimal realization.
std::vector<bool> greedy_removal(const DescentModel& model, const std::vector<std::uint32_t>& order) {
  std::vector<bool> present(model.edges().size(), true);
  std::vector<std::uint32_t> coverage(model.demands().size());
  for (std::size_t d = 0; d < coverage.size(); ++d) {
    coverage[d] = static_cast<std::uint32_t>(model.demands()[d].options.size());
  }
  for (auto e : order) {
    const auto& ds = model.demands_of(e);
    bool removable = std::all_of(ds.begin(), ds.end(), [&](auto d) { return coverage[d] >= 2; });
    if (!removable) continue;
    present[e] = false;
    for (auto d : ds) --coverage[d];
  }
  return present;
}

Realization realization_of(const DescentModel& model, const std::vector<bool>& present) {
  return Realization::from_graph(LabeledGraph(model.set(), model.select(present)));
}

SearchState root_state(const DescentModel& model) {
  SearchState root(model);
  for (auto e : model.forced()) root.include(e);
  return root;
}

}  // namespace

Realization minimize_greedy(const VectorSet& s, std::uint64_t seed) {
  DescentModel model(s);
  return realization_of(model, greedy_removal(model, scan_order(model.edges().size(), seed)));
}

std::vector<Realization> enumerate_minimal(const VectorSet& s, const EnumerationLimits& limits) {
  if (s.size() > limits.max_vertices) {
    throw PreconditionError("enumeration is limited to " + std::to_string(limits.max_vertices) +
                            " vertices, set has " + std::to_string(s.size()));
  }
  DescentModel model(s);
  const auto m = model.edges().size();
  if (m > limits.max_canonical_edges || m > 64) {
    throw PreconditionError("enumeration is limited to " +
                            std::to_string(std::min<std::size_t>(limits.max_canonical_edges, 64)) +
                            " canonical edges, set has " + std::to_string(m));
  }

  // An edge is removable from a realization iff none of its demands would be
  // left uncovered.
  auto removable = [&](std::uint64_t mask, std::uint32_t e) {
    for (auto d : model.demands_of(e)) {
      std::size_t cover = 0;
      for (auto opt : model.demands()[d].options) cover += (mask >> opt) & 1u;
      if (cover < 2) return false;
    }
    return true;
  };

  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::unordered_set<std::uint64_t> seen{full};
  std::vector<std::uint64_t> stack{full};
  std::vector<std::uint64_t> minimal;
  while (!stack.empty()) {
    auto mask = stack.back();
    stack.pop_back();
    bool any = false;
    for (std::uint32_t e = 0; e < m; ++e) {
      if (!((mask >> e) & 1u) || !removable(mask, e)) continue;
      any = true;
      auto next = mask & ~(std::uint64_t{1} << e);
      if (seen.insert(next).second) stack.push_back(next);
    }
    if (!any) minimal.push_back(mask);
  }

  std::vector<Realization> out;
  out.reserve(minimal.size());
  for (auto mask : minimal) {
    std::vector<bool> present(m);
    for (std::size_t e = 0; e < m; ++e) present[e] = (mask >> e) & 1u;
    out.push_back(realization_of(model, present));
  }
  std::sort(out.begin(), out.end(), [](const Realization& a, const Realization& b) {
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return a.graph().edges() < b.graph().edges();
  });
  return out;
}

namespace {

std::size_t search_minimum(const DescentModel& model, const SearchState& root, std::size_t upper_bound,
                           const SearchOptions& options) {
  return options.workers <= 1 ? detail::serial::minimum_count(model, root, upper_bound)
                              : detail::parallel::minimum_count(model, root, upper_bound, options.workers);
}

bool search_feasible(const DescentModel& model, const SearchState& root, std::size_t budget,
                     const SearchOptions& options) {
  return options.workers <= 1 ? detail::serial::feasible(model, root, budget)
                              : detail::parallel::feasible(model, root, budget, options.workers);
}

std::size_t greedy_upper_bound(const DescentModel& model) {
  auto present = greedy_removal(model, scan_order(model.edges().size(), 0));
  return static_cast<std::size_t>(std::count(present.begin(), present.end(), true));
}

// Decides edges in lexicographic order, keeping each one whenever an optimal
// completion still exists; the result is the lexicographically smallest
// optimal edge set.
std::vector<bool> smallest_optimal(const DescentModel& model, SearchState state, std::size_t optimum,
                                   const SearchOptions& options) {
  for (std::uint32_t e = 0; e < model.edges().size(); ++e) {
    if (state.status(e) != detail::EdgeStatus::kFree) continue;
    auto with = state;
    with.include(e);
    if (search_feasible(model, with, optimum, options)) {
      state = std::move(with);
    } else {
      state.exclude(e);
    }
    state.propagate();
  }
  return state.present();
}

}  // namespace

MinimumResult minimum_edges(const VectorSet& s, const SearchOptions& options) {
  DescentModel model(s);
  auto root = root_state(model);
  auto count = search_minimum(model, root, greedy_upper_bound(model), options);
  auto present = smallest_optimal(model, root, count, options);
  return MinimumResult{count, realization_of(model, present)};
}

bool bmetrel_decide(const VectorSet& s, std::size_t k, const SearchOptions& options) {
  DescentModel model(s);
  return search_feasible(model, root_state(model), k, options);
}

std::vector<Realization> all_minimum_realizations(const VectorSet& s, const SearchOptions& options) {
  DescentModel model(s);
  auto root = root_state(model);
  auto count = search_minimum(model, root, greedy_upper_bound(model), options);
  auto sets = options.workers <= 1 ? detail::serial::enumerate(model, root, count)
                                   : detail::parallel::enumerate(model, root, count, options.workers);
  std::vector<Realization> out;
  out.reserve(sets.size());
  for (const auto& present : sets) out.push_back(realization_of(model, present));
  std::sort(out.begin(), out.end(), [](const Realization& a, const Realization& b) {
    return a.graph().edges() < b.graph().edges();
  });
  return out;
}

bool is_uniquely_realizable(const VectorSet& s) {
  require_realizable(s);
  // x is the sole element of D_S(y) one step below y in coordinate i.
  auto sole_descent = [&](const CoordVector& x, const CoordVector& y, std::size_t i) {
    if (x[i] != y[i] - 1) return false;
    auto below = d_neighborhood(s, y);
    return std::count_if(below.begin(), below.end(), [&](const CoordVector& z) { return z[i] == y[i] - 1; }) == 1;
  };
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const auto& x = s[a];
      const auto& y = s[b];
      if (!chebyshev_adjacent(x, y)) continue;
      bool pinned = false;
      for (std::size_t i = 0; i < s.dim() && !pinned; ++i) {
        pinned = sole_descent(x, y, i) || sole_descent(y, x, i);
      }
      if (!pinned) return false;
    }
  }
  return true;
}

std::vector<Edge> forced_edges(const VectorSet& s) {
  DescentModel model(s);
  std::vector<Edge> out;
  for (auto e : model.forced()) out.push_back(model.edges()[e]);
  return out;
}

}  // namespace metrel
