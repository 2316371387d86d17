#include <algorithm>
#include <atomic>
#include <deque>

#include <omp.h>

#include "descent_search.hpp"

namespace metrel::detail::parallel {

namespace {

// Subtrees per worker handed to the dynamic scheduler.
constexpr std::size_t kTasksPerWorker = 8;

// Breadth-first expansion of the root until the frontier is wide enough.
// Nodes that fail or complete during expansion are handed to `settle`; it
// returns true to keep searching below a node, false to drop it.
template <typename Settle>
std::vector<SearchState> split(const SearchState& root, std::size_t width, Settle&& settle) {
  std::deque<SearchState> queue{root};
  std::vector<SearchState> frontier;
  while (!queue.empty() && queue.size() + frontier.size() < width) {
    auto state = std::move(queue.front());
    queue.pop_front();
    if (!settle(state)) continue;
    for (auto& child : branch(state)) queue.push_back(std::move(child));
  }
  frontier.insert(frontier.end(), std::make_move_iterator(queue.begin()),
                  std::make_move_iterator(queue.end()));
  return frontier;
}

void lower_to(std::atomic<std::size_t>& best, std::size_t value) {
  auto current = best.load();
  while (value < current && !best.compare_exchange_weak(current, value)) {
  }
}

void minimize_from(SearchState state, std::atomic<std::size_t>& best) {
  if (!state.propagate() || state.lower_bound() >= best.load(std::memory_order_relaxed)) return;
  if (state.complete()) {
    lower_to(best, state.included());
    return;
  }
  for (auto& child : branch(state)) minimize_from(std::move(child), best);
}

bool feasible_from(SearchState state, std::size_t budget, const std::atomic<bool>& found) {
  if (found.load(std::memory_order_relaxed)) return false;
  if (!state.propagate() || state.lower_bound() > budget) return false;
  if (state.complete()) return true;
  for (auto& child : branch(state)) {
    if (feasible_from(std::move(child), budget, found)) return true;
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

std::size_t frontier_width(int workers) {
  return kTasksPerWorker * static_cast<std::size_t>(std::max(workers, 1));
}

}  // namespace

std::size_t minimum_count(const DescentModel&, const SearchState& root, std::size_t upper_bound,
                          int workers) {
  std::atomic<std::size_t> best{upper_bound};
  auto frontier = split(root, frontier_width(workers), [&](SearchState& s) {
    if (!s.propagate() || s.lower_bound() >= best.load()) return false;
    if (s.complete()) {
      lower_to(best, s.included());
      return false;
    }
    return true;
  });

  const auto tasks = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t t = 0; t < tasks; ++t) {
    minimize_from(frontier[static_cast<std::size_t>(t)], best);
  }
  return best.load();
}

bool feasible(const DescentModel&, const SearchState& root, std::size_t budget, int workers) {
  std::atomic<bool> found{false};
  auto frontier = split(root, frontier_width(workers), [&](SearchState& s) {
    if (found.load() || !s.propagate() || s.lower_bound() > budget) return false;
    if (s.complete()) {
      found.store(true);
      return false;
    }
    return true;
  });
  if (found.load()) return true;

  const auto tasks = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t t = 0; t < tasks; ++t) {
    if (feasible_from(frontier[static_cast<std::size_t>(t)], budget, found)) found.store(true);
  }
  return found.load();
}

std::vector<std::vector<bool>> enumerate(const DescentModel&, const SearchState& root, std::size_t budget,
                                         int workers) {
  std::vector<std::vector<bool>> settled;
  auto frontier = split(root, frontier_width(workers), [&](SearchState& s) {
    if (!s.propagate() || s.lower_bound() > budget) return false;
    if (s.complete()) {
      settled.push_back(s.present());
      return false;
    }
    return true;
  });

  std::vector<std::vector<std::vector<bool>>> per_task(frontier.size());
  const auto tasks = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t t = 0; t < tasks; ++t) {
    auto i = static_cast<std::size_t>(t);
    enumerate_from(frontier[i], budget, per_task[i]);
  }
  for (auto& part : per_task) {
    settled.insert(settled.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return settled;
}

}  // namespace metrel::detail::parallel
