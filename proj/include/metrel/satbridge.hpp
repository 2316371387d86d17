#pragma once

// Builds bounded-realization instances from 3SAT formulas: a formula with n
// variables and m clauses becomes a set of 3n + m + 2 vectors in dimension
// n + m + 1 together with an edge budget k = 5n + sum |C_j|, such that the
// set has a realization with at most k edges iff the formula is satisfiable.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metrel/core.hpp"

namespace metrel::sat {

// Signed 1-based variable index.
using Literal = int;
using Clause = std::vector<Literal>;

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
};

// Truth values indexed by variable - 1.
using Assignment = std::vector<bool>;

// DIMACS CNF: 'c' comment lines, one 'p cnf <vars> <clauses>' header, then
// 0-terminated literal lists. Clauses with more than three literals are
// rejected. Throws FormatError.
CnfFormula parse_dimacs(std::string_view text);

std::string to_dimacs(const CnfFormula& f);

bool satisfies(const CnfFormula& f, const Assignment& a);

// Exhaustive search; nullopt when unsatisfiable. At most 20 variables.
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

inline constexpr std::size_t kMaxBruteForceVars = 20;

struct NormalizedFormula {
  enum class Verdict { kReduced, kTriviallySat, kTriviallyUnsat };

  Verdict verdict = Verdict::kReduced;
  // Remaining clauses over variables renumbered 1..k, each with at least two
  // distinct variables. Empty unless verdict is kReduced.
  CnfFormula formula;
  // original_var[v - 1] is the input variable behind reduced variable v.
  std::vector<std::size_t> original_var;
  // Per input variable: value fixed by unit propagation, if any.
  std::vector<std::optional<bool>> fixed;

  std::size_t input_vars() const { return fixed.size(); }

  // Full assignment over the input variables: reduced values, then
  // propagated values, and true for variables that no longer occur.
  Assignment lift(const Assignment& reduced) const;
  // Values of the reduced variables.
  Assignment restrict(const Assignment& input) const;
};

// Drops tautologies and repeated literals, then unit-propagates to fixpoint.
NormalizedFormula normalize_formula(const CnfFormula& f);

struct VertexRole {
  enum class Kind { kPositive, kNegative, kVariable, kClause, kSource, kSink };

  Kind kind = Kind::kSink;
  std::size_t index = 0;  // 1-based variable or clause index; 0 for s and t

  // "x1", "~x1", "r1", "c1", "s", "t"
  std::string name() const;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct ReductionInstance {
  NormalizedFormula normalized;
  VectorSet set;
  std::size_t bound_k = 0;
  // roles[v] names set element v.
  std::vector<VertexRole> roles;

  const CnfFormula& formula() const { return normalized.formula; }
  std::size_t vertex(VertexRole role) const;
};

// Throws PreconditionError unless the verdict is kReduced.
ReductionInstance reduce_3sat(const NormalizedFormula& normalized);

// Literals joined to their r_i, their clauses, s and t.
Realization witness_graph_g0(const ReductionInstance& inst);

// Like G0, but t is joined only to the literal made true by the assignment
// (given over the input variables). Throws PreconditionError if the
// assignment does not satisfy the normalized formula.
Realization satisfying_graph(const ReductionInstance& inst, const Assignment& assignment);

// Reads the assignment off the neighbours of t and lifts it to the input
// variables. Throws PreconditionError if r is over budget, is over a different
// set, or t's neighbours do not pick exactly one literal per variable.
Assignment decode_assignment(const ReductionInstance& inst, const Realization& r);

}  // namespace metrel::sat
