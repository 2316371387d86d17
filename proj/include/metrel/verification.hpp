#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "metrel/core.hpp"

namespace metrel {

struct VerificationReport {
  enum class Status { kOk, kMismatch, kDisconnected };

  Status status = Status::kOk;
  // First mismatch, scanning landmarks in coordinate order and vertices in
  // lexicographic order. Meaningful only for kMismatch.
  CoordVector vertex;
  std::size_t landmark = 0;  // 0-based coordinate
  std::int32_t expected = 0;
  std::int32_t actual = 0;

  bool ok() const { return status == Status::kOk; }
  std::string describe() const;
};

// Checks that g is connected and that d(u, landmarks[i]) == u_i for every
// vertex u and coordinate i.
VerificationReport verify_realization(const LabeledGraph& g,
                                      const std::vector<std::size_t>& landmarks,
                                      const VectorSet& s);

// Metric representation of every vertex with respect to the ordered landmark
// list. Throws on a disconnected graph.
std::vector<CoordVector> metric_representations(const Graph& g,
                                                const std::vector<std::size_t>& landmarks);

bool is_resolving_set(const Graph& g, const std::vector<std::size_t>& landmarks);

// Relabels each vertex by its metric representation. The result is the
// equivalent realization over the induced coordinate set, whose edges form a
// spanning subgraph of that set's canonical graph.
Realization project_to_canonical(const Graph& g, const std::vector<std::size_t>& landmarks);

// Realizations of the same set are equivalent iff their labeled edge sets are
// identical. Throws PreconditionError if the sets differ.
bool are_equivalent(const Realization& a, const Realization& b);

inline constexpr std::size_t kMaxIsomorphismOrder = 10;

// Abstract isomorphism by degree-pruned backtracking; both graphs must have at
// most kMaxIsomorphismOrder vertices.
bool are_isomorphic_small(const Graph& a, const Graph& b);
inline bool are_isomorphic_small(const LabeledGraph& a, const LabeledGraph& b) {
  return are_isomorphic_small(a.topology(), b.topology());
}

}  // namespace metrel
