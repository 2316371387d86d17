#include "metrel/satbridge.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

namespace metrel::sat {

namespace {

std::size_t var_of(Literal l) { return static_cast<std::size_t>(std::abs(l)); }

bool literal_true(Literal l, const Assignment& a) { return a[var_of(l) - 1] == (l > 0); }

long long parse_integer(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw FormatError("line " + std::to_string(line) + ": '" + token + "' is not an integer");
  }
  return value;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  Clause current;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token) || token == "c" || token.front() == 'c') continue;
    if (token == "%") break;  // SATLIB trailer
    if (token == "p") {
      std::string kind, vars, clauses, extra;
      if (have_header) throw FormatError("line " + std::to_string(line_no) + ": duplicate header");
      if (!(tokens >> kind >> vars >> clauses) || kind != "cnf" || (tokens >> extra)) {
        throw FormatError("line " + std::to_string(line_no) + ": expected 'p cnf <vars> <clauses>'");
      }
      auto nv = parse_integer(vars, line_no);
      auto nc = parse_integer(clauses, line_no);
      if (nv < 0 || nc < 0) throw FormatError("line " + std::to_string(line_no) + ": negative count in header");
      f.num_vars = static_cast<std::size_t>(nv);
      declared_clauses = static_cast<std::size_t>(nc);
      have_header = true;
      continue;
    }
    if (!have_header) throw FormatError("line " + std::to_string(line_no) + ": clause before 'p cnf' header");
    do {
      auto value = parse_integer(token, line_no);
      if (value == 0) {
        if (current.empty()) throw FormatError("line " + std::to_string(line_no) + ": empty clause");
        if (current.size() > 3) {
          throw FormatError("line " + std::to_string(line_no) + ": clause has " +
                            std::to_string(current.size()) + " literals, at most 3 allowed");
        }
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<unsigned long long>(std::llabs(value)) > f.num_vars) {
        throw FormatError("line " + std::to_string(line_no) + ": literal " + token + " exceeds " +
                          std::to_string(f.num_vars) + " variables");
      }
      current.push_back(static_cast<Literal>(value));
    } while (tokens >> token);
  }
  if (!have_header) throw FormatError("missing 'p cnf' header");
  if (!current.empty()) throw FormatError("last clause is not terminated by 0");
  if (f.clauses.size() != declared_clauses) {
    throw FormatError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                      std::to_string(f.clauses.size()));
  }
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (auto l : c) out += std::to_string(l) + " ";
    out += "0\n";
  }
  return out;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.size() < f.num_vars) throw PreconditionError("assignment covers too few variables");
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](Literal l) { return literal_true(l, a); });
  });
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
  if (f.num_vars > kMaxBruteForceVars) {
    throw PreconditionError("brute force is limited to " + std::to_string(kMaxBruteForceVars) + " variables");
  }
  Assignment a(f.num_vars);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.num_vars); ++mask) {
    for (std::size_t v = 0; v < f.num_vars; ++v) a[v] = (mask >> v) & 1u;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

Assignment NormalizedFormula::lift(const Assignment& reduced) const {
  if (reduced.size() != original_var.size()) throw PreconditionError("assignment size mismatch");
  Assignment out(fixed.size(), true);
  for (std::size_t v = 0; v < fixed.size(); ++v) {
    if (fixed[v]) out[v] = *fixed[v];
  }
  for (std::size_t v = 0; v < reduced.size(); ++v) out[original_var[v] - 1] = reduced[v];
  return out;
}

Assignment NormalizedFormula::restrict(const Assignment& input) const {
  if (input.size() != fixed.size()) throw PreconditionError("assignment size mismatch");
  Assignment out(original_var.size());
  for (std::size_t v = 0; v < original_var.size(); ++v) out[v] = input[original_var[v] - 1];
  return out;
}

NormalizedFormula normalize_formula(const CnfFormula& f) {
  NormalizedFormula out;
  out.fixed.assign(f.num_vars, std::nullopt);

  std::vector<Clause> clauses;
  for (const auto& c : f.clauses) {
    std::set<Literal> lits(c.begin(), c.end());
    bool tautology = std::any_of(lits.begin(), lits.end(), [&](Literal l) { return lits.count(-l) > 0; });
    if (!tautology) clauses.emplace_back(lits.begin(), lits.end());
  }

  for (;;) {
    auto unit = std::find_if(clauses.begin(), clauses.end(), [](const Clause& c) { return c.size() == 1; });
    if (unit == clauses.end()) break;
    const Literal l = unit->front();
    out.fixed[var_of(l) - 1] = l > 0;
    std::vector<Clause> next;
    for (auto& c : clauses) {
      if (std::find(c.begin(), c.end(), l) != c.end()) continue;
      c.erase(std::remove(c.begin(), c.end(), -l), c.end());
      if (c.empty()) {
        out.verdict = NormalizedFormula::Verdict::kTriviallyUnsat;
        return out;
      }
      next.push_back(std::move(c));
    }
    clauses = std::move(next);
  }

  if (clauses.empty()) {
    out.verdict = NormalizedFormula::Verdict::kTriviallySat;
    return out;
  }

  std::set<std::size_t> used;
  for (const auto& c : clauses) {
    for (auto l : c) used.insert(var_of(l));
  }
  out.original_var.assign(used.begin(), used.end());
  std::vector<std::size_t> renumber(f.num_vars + 1, 0);
  for (std::size_t v = 0; v < out.original_var.size(); ++v) renumber[out.original_var[v]] = v + 1;
  out.formula.num_vars = out.original_var.size();
  for (auto& c : clauses) {
    for (auto& l : c) {
      auto v = static_cast<Literal>(renumber[var_of(l)]);
      l = l > 0 ? v : -v;
    }
    out.formula.clauses.push_back(std::move(c));
  }
  return out;
}

std::string VertexRole::name() const {
  switch (kind) {
    case Kind::kPositive:
      return "x" + std::to_string(index);
    case Kind::kNegative:
      return "~x" + std::to_string(index);
    case Kind::kVariable:
      return "r" + std::to_string(index);
    case Kind::kClause:
      return "c" + std::to_string(index);
    case Kind::kSource:
      return "s";
    case Kind::kSink:
      break;
  }
  return "t";
}

std::size_t ReductionInstance::vertex(VertexRole role) const {
  auto it = std::find(roles.begin(), roles.end(), role);
  if (it == roles.end()) throw PreconditionError("no vertex named " + role.name());
  return static_cast<std::size_t>(it - roles.begin());
}

namespace {

using Kind = VertexRole::Kind;

bool clause_has(const Clause& c, Literal l) { return std::find(c.begin(), c.end(), l) != c.end(); }

bool clause_mentions(const Clause& c, std::size_t var) {
  return std::any_of(c.begin(), c.end(), [&](Literal l) { return var_of(l) == var; });
}

bool clauses_meet(const Clause& a, const Clause& b) {
  return std::any_of(a.begin(), a.end(), [&](Literal l) { return clause_has(b, l); });
}

// Coordinates in the order r_1..r_n, c_1..c_m, s.
CoordVector literal_vector(const CnfFormula& f, Literal l) {
  std::vector<std::int32_t> u;
  for (std::size_t p = 1; p <= f.num_vars; ++p) u.push_back(p == var_of(l) ? 1 : 3);
  for (const auto& c : f.clauses) u.push_back(clause_has(c, l) ? 1 : 3);
  u.push_back(1);
  return CoordVector(std::move(u));
}

CoordVector variable_vector(const CnfFormula& f, std::size_t i) {
  std::vector<std::int32_t> u;
  for (std::size_t p = 1; p <= f.num_vars; ++p) u.push_back(p == i ? 0 : 4);
  for (const auto& c : f.clauses) u.push_back(clause_mentions(c, i) ? 2 : 4);
  u.push_back(2);
  return CoordVector(std::move(u));
}

CoordVector clause_vector(const CnfFormula& f, std::size_t j) {
  const auto& cj = f.clauses[j - 1];
  std::vector<std::int32_t> u;
  for (std::size_t p = 1; p <= f.num_vars; ++p) u.push_back(clause_mentions(cj, p) ? 2 : 4);
  for (std::size_t q = 1; q <= f.clauses.size(); ++q) {
    u.push_back(q == j ? 0 : clauses_meet(cj, f.clauses[q - 1]) ? 2 : 4);
  }
  u.push_back(2);
  return CoordVector(std::move(u));
}

CoordVector source_vector(const CnfFormula& f) {
  std::vector<std::int32_t> u(f.num_vars + f.clauses.size(), 2);
  u.push_back(0);
  return CoordVector(std::move(u));
}

CoordVector sink_vector(const CnfFormula& f) {
  return CoordVector(std::vector<std::int32_t>(f.num_vars + f.clauses.size() + 1, 2));
}

// Every edge of G0 except those at t.
std::vector<Edge> core_edges(const ReductionInstance& inst) {
  const auto& f = inst.formula();
  std::vector<Edge> edges;
  auto s = inst.vertex({Kind::kSource, 0});
  for (std::size_t i = 1; i <= f.num_vars; ++i) {
    auto r = inst.vertex({Kind::kVariable, i});
    for (auto kind : {Kind::kPositive, Kind::kNegative}) {
      auto lit = inst.vertex({kind, i});
      edges.push_back(make_edge(r, lit));
      edges.push_back(make_edge(s, lit));
    }
  }
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    auto c = inst.vertex({Kind::kClause, j});
    for (auto l : f.clauses[j - 1]) {
      edges.push_back(make_edge(c, inst.vertex({l > 0 ? Kind::kPositive : Kind::kNegative, var_of(l)})));
    }
  }
  return edges;
}

}  // namespace

ReductionInstance reduce_3sat(const NormalizedFormula& normalized) {
  if (normalized.verdict != NormalizedFormula::Verdict::kReduced) {
    throw PreconditionError("formula was settled by normalization; there is nothing to reduce");
  }
  const auto& f = normalized.formula;
  if (f.num_vars == 0 || f.clauses.empty()) throw PreconditionError("formula has no variables or no clauses");

  std::vector<std::pair<CoordVector, VertexRole>> named;
  for (std::size_t i = 1; i <= f.num_vars; ++i) {
    named.emplace_back(literal_vector(f, static_cast<Literal>(i)), VertexRole{Kind::kPositive, i});
    named.emplace_back(literal_vector(f, -static_cast<Literal>(i)), VertexRole{Kind::kNegative, i});
    named.emplace_back(variable_vector(f, i), VertexRole{Kind::kVariable, i});
  }
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    named.emplace_back(clause_vector(f, j), VertexRole{Kind::kClause, j});
  }
  named.emplace_back(source_vector(f), VertexRole{Kind::kSource, 0});
  named.emplace_back(sink_vector(f), VertexRole{Kind::kSink, 0});

  ReductionInstance inst;
  inst.normalized = normalized;
  std::vector<CoordVector> vectors;
  for (const auto& [v, role] : named) vectors.push_back(v);
  inst.set = VectorSet(std::move(vectors));
  inst.roles.resize(inst.set.size());
  for (const auto& [v, role] : named) inst.roles[*inst.set.index_of(v)] = role;

  std::size_t literal_total = 0;
  for (const auto& c : f.clauses) literal_total += c.size();
  inst.bound_k = 5 * f.num_vars + literal_total;
  return inst;
}

Realization witness_graph_g0(const ReductionInstance& inst) {
  auto edges = core_edges(inst);
  auto t = inst.vertex({Kind::kSink, 0});
  for (std::size_t i = 1; i <= inst.formula().num_vars; ++i) {
    edges.push_back(make_edge(t, inst.vertex({Kind::kPositive, i})));
    edges.push_back(make_edge(t, inst.vertex({Kind::kNegative, i})));
  }
  return Realization::from_graph(LabeledGraph(inst.set, std::move(edges)));
}

Realization satisfying_graph(const ReductionInstance& inst, const Assignment& assignment) {
  auto reduced = inst.normalized.restrict(assignment);
  if (!satisfies(inst.formula(), reduced)) {
    throw PreconditionError("assignment does not satisfy the normalized formula");
  }
  auto edges = core_edges(inst);
  auto t = inst.vertex({Kind::kSink, 0});
  for (std::size_t i = 1; i <= inst.formula().num_vars; ++i) {
    auto kind = reduced[i - 1] ? Kind::kPositive : Kind::kNegative;
    edges.push_back(make_edge(t, inst.vertex({kind, i})));
  }
  return Realization::from_graph(LabeledGraph(inst.set, std::move(edges)));
}

Assignment decode_assignment(const ReductionInstance& inst, const Realization& r) {
  if (!(r.set() == inst.set)) throw PreconditionError("realization is over a different vector set");
  if (r.edge_count() > inst.bound_k) {
    throw PreconditionError("realization has " + std::to_string(r.edge_count()) + " edges, budget is " +
                            std::to_string(inst.bound_k));
  }
  const auto& g = r.graph().topology();
  auto t = inst.vertex({Kind::kSink, 0});
  Assignment reduced(inst.formula().num_vars);
  for (std::size_t i = 1; i <= inst.formula().num_vars; ++i) {
    bool pos = g.has_edge(t, inst.vertex({Kind::kPositive, i}));
    bool neg = g.has_edge(t, inst.vertex({Kind::kNegative, i}));
    if (pos == neg) {
      throw PreconditionError("t is adjacent to " + std::string(pos ? "both" : "neither") + " of x" +
                              std::to_string(i) + " and ~x" + std::to_string(i));
    }
    reduced[i - 1] = pos;
  }
  return inst.normalized.lift(reduced);
}

}  // namespace metrel::sat
