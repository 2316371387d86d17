#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "metrel/core.hpp"

namespace metrel {

// One failed condition of the realizability characterization:
//   1  an entry is negative, or a vector has more than one zero entry
//   2  a coordinate has no zero-holder or more than one
//   3  a vector with x_i > 0 has no y with y_i = x_i - 1 within Chebyshev
//      distance 1
struct Violation {
  int condition = 0;
  std::vector<CoordVector> witnesses;
  std::size_t coordinate = 0;  // 0-based

  std::string describe() const;
};

struct RealizabilityReport {
  static constexpr std::size_t kMaxViolations = 100;

  bool realizable = true;
  std::vector<Violation> violations;
  bool truncated = false;
};

RealizabilityReport check_realizable(const VectorSet& s);

// Vertex set S, edges the Chebyshev-adjacent pairs, landmarks the zero-holders.
// Throws NotRealizableError on a non-realizable set.
Realization canonical_realization(const VectorSet& s);

// Edges of the canonical graph of s, sorted. Does not check realizability.
std::vector<Edge> canonical_edges(const VectorSet& s);

// D_S(x): elements of s at Chebyshev distance exactly 1 from x, in order.
std::vector<CoordVector> d_neighborhood(const VectorSet& s, const CoordVector& x);

class NotRealizableError : public PreconditionError {
 public:
  explicit NotRealizableError(RealizabilityReport report);
  const RealizabilityReport& report() const { return report_; }

 private:
  RealizabilityReport report_;
};

// Throws NotRealizableError unless s is realizable.
void require_realizable(const VectorSet& s);

}  // namespace metrel
