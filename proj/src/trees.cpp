#include "metrel/trees.hpp"

#include <algorithm>

#include "metrel/realizability.hpp"

namespace metrel {

Strata split_strata(const VectorSet& s) {
  Strata out;
  for (const auto& x : s) {
    if (s.contains(x.shifted(-1))) {
      out.s1.push_back(x);
    } else {
      out.s0.push_back(x);
      if (s.contains(x.shifted(1))) out.s0_star.push_back(x);
    }
  }
  return out;
}

std::string TreeVerdict::describe() const {
  switch (failed_condition) {
    case 0:
      return "tree-realizable";
    case 1:
      return "condition (i): " + x.to_string() + " and " + y.to_string() +
             " are Chebyshev-adjacent but agree in coordinate " + std::to_string(coordinate + 1);
    default:
      return "condition (ii): " + x.to_string() + " has " + std::to_string(candidates) +
             " descents in S0 for coordinate " + std::to_string(coordinate + 1) + ", expected 1";
  }
}

TreeVerdict tree_realizable(const VectorSet& s) {
  require_realizable(s);
  TreeVerdict verdict;

  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!chebyshev_adjacent(s[a], s[b])) continue;
      for (std::size_t j = 0; j < s.dim(); ++j) {
        if (s[a][j] == s[b][j]) {
          verdict.failed_condition = 1;
          verdict.x = s[a];
          verdict.y = s[b];
          verdict.coordinate = j;
          return verdict;
        }
      }
    }
  }

  auto s0 = split_strata(s).s0;
  for (const auto& x : s0) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (x[j] <= 0) continue;
      auto count = static_cast<std::size_t>(std::count_if(s0.begin(), s0.end(), [&](const CoordVector& y) {
        return y[j] == x[j] - 1 && chebyshev_adjacent(x, y);
      }));
      if (count != 1) {
        verdict.failed_condition = 2;
        verdict.x = x;
        verdict.coordinate = j;
        verdict.candidates = count;
        return verdict;
      }
    }
  }

  verdict.realizable = true;
  return verdict;
}

Realization build_tree_realization(const VectorSet& s) {
  auto verdict = tree_realizable(s);
  if (!verdict.realizable) throw PreconditionError("set is not tree-realizable: " + verdict.describe());

  auto strata = split_strata(s);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < strata.s0.size(); ++a) {
    for (std::size_t b = a + 1; b < strata.s0.size(); ++b) {
      if (chebyshev_adjacent(strata.s0[a], strata.s0[b])) {
        edges.push_back(make_edge(*s.index_of(strata.s0[a]), *s.index_of(strata.s0[b])));
      }
    }
  }
  for (const auto& y : strata.s1) {
    edges.push_back(make_edge(*s.index_of(y), *s.index_of(y.shifted(-1))));
  }
  return Realization::from_graph(LabeledGraph(s, std::move(edges)));
}

bool uniquely_realizable_by_tree(const VectorSet& s) {
  auto verdict = tree_realizable(s);
  if (!verdict.realizable) throw PreconditionError("set is not tree-realizable: " + verdict.describe());
  auto star = split_strata(s).s0_star;
  for (std::size_t a = 0; a < star.size(); ++a) {
    for (std::size_t b = a + 1; b < star.size(); ++b) {
      if (chebyshev_distance(star[a], star[b]) <= 1) return false;
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && g.edge_count() + 1 == g.order() && is_connected(g);
}

}  // namespace metrel
