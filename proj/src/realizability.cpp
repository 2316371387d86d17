#include "metrel/realizability.hpp"

#include <algorithm>

namespace metrel {

std::string Violation::describe() const {
  std::string s = "condition " + std::to_string(condition) + ", coordinate " +
                  std::to_string(coordinate + 1) + ":";
  if (witnesses.empty()) s += " none";
  for (const auto& w : witnesses) s += " " + w.to_string();
  return s;
}

RealizabilityReport check_realizable(const VectorSet& s) {
  RealizabilityReport report;
  auto add = [&report](Violation v) {
    if (report.violations.size() < RealizabilityReport::kMaxViolations) {
      report.violations.push_back(std::move(v));
    } else {
      report.truncated = true;
    }
  };

  const auto n = s.dim();
  for (const auto& x : s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] < 0) add({1, {x}, i});
    }
    if (x.zero_count() > 1) {
      auto first_zero = std::find(x.coords().begin(), x.coords().end(), 0);
      auto second_zero = std::find(first_zero + 1, x.coords().end(), 0);
      add({1, {x}, static_cast<std::size_t>(second_zero - x.coords().begin())});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<CoordVector> holders;
    for (const auto& x : s) {
      if (x[i] == 0) holders.push_back(x);
    }
    if (holders.size() != 1) add({2, std::move(holders), i});
  }

  for (const auto& x : s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] <= 0) continue;
      bool found = std::any_of(s.begin(), s.end(), [&](const CoordVector& y) {
        return y[i] == x[i] - 1 && chebyshev_distance(x, y) <= 1;
      });
      if (!found) add({3, {x}, i});
    }
  }

  report.realizable = report.violations.empty();
  return report;
}

NotRealizableError::NotRealizableError(RealizabilityReport report)
    : PreconditionError("vector set is not realizable" +
                        (report.violations.empty()
                             ? std::string()
                             : " (" + report.violations.front().describe() + ")")),
      report_(std::move(report)) {}

void require_realizable(const VectorSet& s) {
  auto report = check_realizable(s);
  if (!report.realizable) throw NotRealizableError(std::move(report));
}

std::vector<Edge> canonical_edges(const VectorSet& s) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < s.size(); ++u) {
    for (std::size_t v = u + 1; v < s.size(); ++v) {
      if (chebyshev_adjacent(s[u], s[v])) edges.push_back(make_edge(u, v));
    }
  }
  return edges;
}

Realization canonical_realization(const VectorSet& s) {
  require_realizable(s);
  return Realization::from_graph(LabeledGraph(s, canonical_edges(s)));
}

std::vector<CoordVector> d_neighborhood(const VectorSet& s, const CoordVector& x) {
  if (!s.contains(x)) throw PreconditionError(x.to_string() + " is not in the set");
  std::vector<CoordVector> out;
  for (const auto& y : s) {
    if (chebyshev_adjacent(x, y)) out.push_back(y);
  }
  return out;
}

}  // namespace metrel
