#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metrel/core.hpp"

namespace metrel {

// S1 holds the vectors x with x - 1 in S, S0 the rest, and S0* the members of
// S0 with x + 1 in S. Each part is in lexicographic order.
struct Strata {
  std::vector<CoordVector> s0;
  std::vector<CoordVector> s1;
  std::vector<CoordVector> s0_star;
};

Strata split_strata(const VectorSet& s);

struct TreeVerdict {
  bool realizable = false;
  // 1: a Chebyshev-adjacent pair agrees in some coordinate.
  // 2: some x in S0 with x_j > 0 has zero or several Chebyshev neighbours y
  //    in S0 with y_j = x_j - 1.
  int failed_condition = 0;
  CoordVector x;
  CoordVector y;             // partner for condition 1
  std::size_t coordinate = 0;  // 0-based
  std::size_t candidates = 0;  // count found for condition 2

  std::string describe() const;
};

// Whether some realization of s is a tree. Throws NotRealizableError on a
// non-realizable set.
TreeVerdict tree_realizable(const VectorSet& s);

// The canonical edges inside S0 plus y -- (y - 1) for every y in S1. Throws
// PreconditionError unless s is tree-realizable.
Realization build_tree_realization(const VectorSet& s);

// A tree-realizable s is uniquely realizable iff no two distinct members of
// S0* are Chebyshev-adjacent.
bool uniquely_realizable_by_tree(const VectorSet& s);

bool is_tree(const Graph& g);

}  // namespace metrel
