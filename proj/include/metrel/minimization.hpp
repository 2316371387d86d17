#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "metrel/core.hpp"

namespace metrel {

// Adding xy to a realization keeps it a realization iff x and y are
// Chebyshev-adjacent. Throws PreconditionError if xy is already an edge.
bool addable_edge(const Realization& r, const CoordVector& x, const CoordVector& y);

// Removing xy keeps all distances to the landmarks iff, for every coordinate
// i with x_i = y_i - 1, y has another neighbour z with z_i = x_i (and the
// same with x and y swapped). Throws PreconditionError if xy is absent.
bool removable_edge(const Realization& r, const CoordVector& x, const CoordVector& y);

// Whether the spanning subgraph of the canonical graph with the given edges
// realizes s: every vertex u with u_i > 0 needs a neighbour z with
// z_i = u_i - 1. Throws PreconditionError for an edge outside the canonical
// graph or a non-realizable set.
bool descent_realizes(const VectorSet& s, const std::vector<Edge>& edges);

// Removes removable edges from the canonical realization until none is left.
// Seed 0 scans edges in lexicographic order; other seeds scan a Fisher-Yates
// permutation drawn from mt19937_64(seed).
Realization minimize_greedy(const VectorSet& s, std::uint64_t seed = 0);

struct EnumerationLimits {
  std::size_t max_vertices = 12;
  std::size_t max_canonical_edges = 20;
};

// Every minimal realization of s up to equivalence, ordered by edge count and
// then by edge list. Throws PreconditionError when s exceeds the limits.
std::vector<Realization> enumerate_minimal(const VectorSet& s, const EnumerationLimits& limits = {});

struct SearchOptions {
  // 1 runs the serial reference search; more runs the OpenMP kernel.
  int workers = 1;
};

struct MinimumResult {
  std::size_t count = 0;
  // Lexicographically smallest optimal edge set.
  Realization witness;
};

MinimumResult minimum_edges(const VectorSet& s, const SearchOptions& options = {});

// Whether s has a realization with at most k edges.
bool bmetrel_decide(const VectorSet& s, std::size_t k, const SearchOptions& options = {});

// Every realization with the minimum number of edges, ordered by edge list.
std::vector<Realization> all_minimum_realizations(const VectorSet& s, const SearchOptions& options = {});

// All realizations of s are equivalent.
bool is_uniquely_realizable(const VectorSet& s);

// Canonical edges that are the only descent option of some (vertex,
// coordinate); they belong to every realization.
std::vector<Edge> forced_edges(const VectorSet& s);

}  // namespace metrel
