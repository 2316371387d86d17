#include "descent_search.hpp"

#include <algorithm>

#include "metrel/realizability.hpp"

namespace metrel::detail {

DescentModel::DescentModel(const VectorSet& s) : set_(s), edges_(canonical_edges(s)) {
  require_realizable(s);
  edge_demands_.resize(edges_.size());

  // Canonical edge ids incident to each vertex.
  std::vector<std::vector<std::uint32_t>> incident(s.size());
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    incident[edges_[e].first].push_back(e);
    incident[edges_[e].second].push_back(e);
  }

  for (VertexId u = 0; u < s.size(); ++u) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (s[u][i] == 0) continue;
      DescentDemand d{u, i, {}};
      for (auto e : incident[u]) {
        auto z = edges_[e].first == u ? edges_[e].second : edges_[e].first;
        if (s[z][i] == s[u][i] - 1) d.options.push_back(e);
      }
      std::sort(d.options.begin(), d.options.end());
      auto id = static_cast<std::uint32_t>(demands_.size());
      for (auto e : d.options) edge_demands_[e].push_back(id);
      demands_.push_back(std::move(d));
    }
  }
}

std::optional<std::uint32_t> DescentModel::edge_id(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::uint32_t>(it - edges_.begin());
}

bool DescentModel::covers(const std::vector<bool>& present) const {
  return std::all_of(demands_.begin(), demands_.end(), [&](const DescentDemand& d) {
    return std::any_of(d.options.begin(), d.options.end(), [&](auto e) { return present[e]; });
  });
}

std::vector<std::uint32_t> DescentModel::forced() const {
  std::vector<std::uint32_t> out;
  for (const auto& d : demands_) {
    if (d.options.size() == 1) out.push_back(d.options.front());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Edge> DescentModel::select(const std::vector<bool>& present) const {
  std::vector<Edge> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (present[e]) out.push_back(edges_[e]);
  }
  return out;
}

SearchState::SearchState(const DescentModel& model)
    : model_(&model),
      status_(model.edges().size(), EdgeStatus::kFree),
      covered_(model.demands().size(), 0),
      alive_(model.demands().size(), 0),
      uncovered_(model.demands().size()) {
  for (std::size_t d = 0; d < model.demands().size(); ++d) {
    alive_[d] = static_cast<std::uint32_t>(model.demands()[d].options.size());
  }
}

void SearchState::include(std::uint32_t e) {
  status_[e] = EdgeStatus::kIn;
  ++included_;
  for (auto d : model_->demands_of(e)) {
    if (covered_[d]++ == 0) --uncovered_;
  }
}

void SearchState::exclude(std::uint32_t e) {
  status_[e] = EdgeStatus::kOut;
  for (auto d : model_->demands_of(e)) --alive_[d];
}

bool SearchState::propagate() {
  const auto& demands = model_->demands();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t d = 0; d < demands.size(); ++d) {
      if (covered_[d] > 0) continue;
      if (alive_[d] == 0) return false;
      if (alive_[d] == 1) {
        for (auto e : demands[d].options) {
          if (status_[e] == EdgeStatus::kFree) {
            include(e);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return true;
}

std::size_t SearchState::lower_bound() const {
  const auto& demands = model_->demands();
  std::vector<bool> claimed(status_.size(), false);
  std::size_t packed = 0;
  for (std::size_t d = 0; d < demands.size(); ++d) {
    if (covered_[d] > 0) continue;
    const auto& opts = demands[d].options;
    bool overlaps = std::any_of(opts.begin(), opts.end(), [&](auto e) {
      return status_[e] == EdgeStatus::kFree && claimed[e];
    });
    if (overlaps) continue;
    ++packed;
    for (auto e : opts) {
      if (status_[e] == EdgeStatus::kFree) claimed[e] = true;
    }
  }
  return included_ + packed;
}

std::optional<std::uint32_t> SearchState::branch_edge() const {
  std::optional<std::uint32_t> best;
  std::size_t best_gain = 0;
  for (std::uint32_t e = 0; e < status_.size(); ++e) {
    if (status_[e] != EdgeStatus::kFree) continue;
    std::size_t gain = 0;
    for (auto d : model_->demands_of(e)) {
      if (covered_[d] == 0) ++gain;
    }
    if (gain > best_gain) {
      best_gain = gain;
      best = e;
    }
  }
  return best;
}

std::vector<bool> SearchState::present() const {
  std::vector<bool> out(status_.size());
  for (std::size_t e = 0; e < status_.size(); ++e) out[e] = status_[e] == EdgeStatus::kIn;
  return out;
}

std::vector<SearchState> branch(const SearchState& state) {
  std::vector<SearchState> children;
  auto e = state.branch_edge();
  if (!e) return children;
  children.push_back(state);
  children.back().include(*e);
  children.push_back(state);
  children.back().exclude(*e);
  return children;
}

namespace serial {

namespace {

void minimize_from(SearchState state, std::size_t& best) {
  if (!state.propagate() || state.lower_bound() >= best) return;
  if (state.complete()) {
    best = state.included();
    return;
  }
  for (auto& child : branch(state)) minimize_from(std::move(child), best);
}

bool feasible_from(SearchState state, std::size_t budget) {
  if (!state.propagate() || state.lower_bound() > budget) return false;
  if (state.complete()) return true;
  for (auto& child : branch(state)) {
    if (feasible_from(std::move(child), budget)) return true;
  }
  return false;
}

void enumerate_from(SearchState state, std::size_t budget, std::vector<std::vector<bool>>& out) {
  if (!state.propagate() || state.lower_bound() > budget) return;
  if (state.complete()) {
    out.push_back(state.present());
    return;
  }
  for (auto& child : branch(state)) enumerate_from(std::move(child), budget, out);
}

}  // namespace

std::size_t minimum_count(const DescentModel&, const SearchState& root, std::size_t upper_bound) {
  std::size_t best = upper_bound;
  minimize_from(root, best);
  return best;
}

bool feasible(const DescentModel&, const SearchState& root, std::size_t budget) {
  return feasible_from(root, budget);
}

std::vector<std::vector<bool>> enumerate(const DescentModel&, const SearchState& root, std::size_t budget) {
  std::vector<std::vector<bool>> out;
  enumerate_from(root, budget, out);
  return out;
}

}  // namespace serial

}  // namespace metrel::detail
