// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "metrel/io.hpp"
#include "metrel/minimization.hpp"
#include "metrel/realizability.hpp"
#include "metrel/satbridge.hpp"
#include "metrel/trees.hpp"
#include "metrel/verification.hpp"

using namespace metrel;
using namespace metrel::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failure messages for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 20) failures.push_back(what);
  }
};

bool report(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  bool pass = c.failures.empty();
  std::printf("%s criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", number, title.c_str(), seconds_since(start));
  for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
  for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return pass;
}

// The three realizability conditions, written out directly.
std::set<int> oracle_conditions(const std::vector<CoordVector>& set) {
  std::set<int> out;
  const auto n = set.front().dim();
  for (const auto& x : set) {
    int zeros = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] < 0) out.insert(1);
      zeros += x[i] == 0;
    }
    if (zeros > 1) out.insert(1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    int holders = 0;
    for (const auto& x : set) holders += x[i] == 0;
    if (holders != 1) out.insert(2);
  }
  for (const auto& x : set) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] <= 0) continue;
      bool found = false;
      for (const auto& y : set) {
        if (y[i] != x[i] - 1) continue;
        std::int32_t d = 0;
        for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(x[k] - y[k]));
        found |= d <= 1;
      }
      if (!found) out.insert(3);
    }
  }
  return out;
}

std::set<int> reported_conditions(const RealizabilityReport& r) {
  std::set<int> out;
  for (const auto& v : r.violations) out.insert(v.condition);
  return out;
}

std::string describe(const std::set<int>& c) {
  std::string out = "{";
  for (auto k : c) out += (out.size() > 1 ? "," : "") + std::to_string(k);
  return out + "}";
}

void criterion_realizability(Criterion& c) {
  const std::vector<std::pair<std::string, VectorSet>> sets{
      {"example set", canonical_example_set()}, {"star set", star_set()},           {"cycle set", cycle_set()},
      {"twin-minimum set", twin_minimum_set()},      {"tree set", tree_set()}, {"unique-tree set", unique_tree_set()}};
  std::mt19937_64 rng(2718);
  std::set<int> seen;
  for (const auto& [name, s] : sets) {
    c.expect(check_realizable(s).realizable, name + " is not reported realizable");
    c.expect(oracle_conditions(s.elements()).empty(), name + " fails the direct condition check");

    // Candidate single-entry mutations, shuffled with a fixed seed.
    std::vector<std::tuple<std::size_t, std::size_t, std::int32_t>> candidates;
    for (std::size_t u = 0; u < s.size(); ++u) {
      for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::int32_t value = -1; value <= 6; ++value) {
          if (value != s[u][i]) candidates.emplace_back(u, i, value);
        }
      }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);

    int taken = 0;
    for (const auto& [u, i, value] : candidates) {
      if (taken == 10) break;
      auto elems = s.elements();
      std::vector<std::int32_t> coords(elems[u].coords().begin(), elems[u].coords().end());
      coords[i] = value;
      elems[u] = CoordVector(coords);
      auto sorted = elems;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      auto expected = oracle_conditions(elems);
      if (expected.empty()) continue;
      ++taken;
      seen.insert(expected.begin(), expected.end());
      auto report = check_realizable(VectorSet(elems));
      auto got = reported_conditions(report);
      c.expect(!report.realizable && got == expected,
               name + " with entry (" + std::to_string(u) + "," + std::to_string(i) + ") = " +
                   std::to_string(value) + ": expected conditions " + describe(expected) + ", got " +
                   describe(got));
    }
    c.expect(taken == 10, name + ": only " + std::to_string(taken) + " breaking mutations");
  }
  c.expect(seen == std::set<int>{1, 2, 3}, "mutations did not exercise all three conditions");
}

void criterion_minimum(Criterion& c) {
  auto start = Clock::now();
  auto s = star_set();
  auto result = minimum_edges(s);
  c.expect(result.count == 6, "minimum_edges(star set) = " + std::to_string(result.count));
  c.expect(result.witness.edge_count() == 6, "witness has the wrong size");
  c.expect(canonical_realization(s).edge_count() == 10, "canonical(star set) does not have 10 edges");
  std::set<std::size_t> sizes;
  for (const auto& r : enumerate_minimal(s)) sizes.insert(r.edge_count());
  for (std::size_t k : {6u, 7u, 8u}) {
    c.expect(sizes.count(k) == 1, "no minimal realization with " + std::to_string(k) + " edges");
  }
  auto elapsed = seconds_since(start);
  c.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
}

void criterion_uniqueness(Criterion& c) {
  c.expect(is_uniquely_realizable(cycle_set()), "cycle set not reported uniquely realizable");
  c.expect(!is_uniquely_realizable(star_set()), "star set reported uniquely realizable");
  auto r = canonical_realization(cycle_set());
  const auto& g = r.graph().topology();
  c.expect(g.order() == 8, "canonical cycle graph does not have 8 vertices");
  c.expect(is_connected(g), "canonical cycle graph is disconnected");
  for (std::size_t u = 0; u < g.order(); ++u) {
    c.expect(g.degree(u) == 2, "vertex " + r.set()[u].to_string() + " has degree " + std::to_string(g.degree(u)));
  }
  // Cross-check against enumeration.
  c.expect(enumerate_minimal(cycle_set()).size() == 1, "cycle set has several minimal realizations");
  c.expect(enumerate_minimal(star_set()).size() > 1, "star set has a single minimal realization");
}

void criterion_non_equivalent(Criterion& c) {
  auto start = Clock::now();
  auto s = twin_minimum_set();
  auto optimal = all_minimum_realizations(s);
  auto count = minimum_edges(s).count;
  std::size_t non_equivalent_pairs = 0;
  bool non_isomorphic = false;
  for (std::size_t a = 0; a < optimal.size(); ++a) {
    c.expect(optimal[a].edge_count() == count, "optimal realization of the wrong size");
    c.expect(verify_realization(optimal[a].graph(), optimal[a].landmarks(), s).ok(), "optimal does not verify");
    for (std::size_t b = a + 1; b < optimal.size(); ++b) {
      if (!are_equivalent(optimal[a], optimal[b])) ++non_equivalent_pairs;
      if (!are_isomorphic_small(optimal[a].graph(), optimal[b].graph())) non_isomorphic = true;
    }
  }
  c.expect(optimal.size() >= 2, "only " + std::to_string(optimal.size()) + " optimal realizations");
  c.expect(non_equivalent_pairs >= 1, "no non-equivalent pair of optimal realizations");
  c.expect(non_isomorphic, "every pair of optimal realizations is isomorphic");
  auto elapsed = seconds_since(start);
  c.expect(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
}

void criterion_trees(Criterion& c) {
  for (const auto& [name, s] : {std::pair{"tree set", tree_set()}, std::pair{"unique-tree set", unique_tree_set()}}) {
    auto verdict = tree_realizable(s);
    c.expect(verdict.realizable, std::string(name) + " not tree-realizable: " + verdict.describe());
    auto r = build_tree_realization(s);
    c.expect(is_tree(r.graph().topology()), std::string(name) + ": built graph is not a tree");
    c.expect(verify_realization(r.graph(), r.landmarks(), s).ok(), std::string(name) + ": tree does not verify");
  }
  c.expect(!uniquely_realizable_by_tree(tree_set()), "tree set reported uniquely realizable");
  c.expect(uniquely_realizable_by_tree(unique_tree_set()), "unique-tree set not reported uniquely realizable");
  c.expect(split_strata(unique_tree_set()).s0_star == std::vector<CoordVector>{v({1, 3}), v({3, 1})},
           "S0* of the unique-tree set differs from {(1,3),(3,1)}");
  // Cross-check against enumeration.
  auto minimal = enumerate_minimal(tree_set());
  c.expect(minimal.size() > 1 || !(minimal.front() == canonical_realization(tree_set())),
           "tree set has the canonical realization as its only minimal one");
  c.expect(enumerate_minimal(unique_tree_set()).size() == 1, "unique-tree set has several minimal realizations");
}

void criterion_edit_laws(Criterion& c) {
  std::mt19937_64 rng(1618);
  std::size_t removals = 0, additions = 0, subsets = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_realizable_set(rng, 10, 3);
    auto r = minimize_greedy(s, rng() % 8);
    const auto& g = r.graph();
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (g.topology().has_edge(a, b)) {
          bool expected = verify_realization(g.without_edge(s[a], s[b]), r.landmarks(), s).ok();
          c.expect(removable_edge(r, s[a], s[b]) == expected, "removable_edge disagrees on " + format_set(s));
          ++removals;
        } else {
          bool expected = verify_realization(g.with_edge(s[a], s[b]), r.landmarks(), s).ok();
          c.expect(addable_edge(r, s[a], s[b]) == expected, "addable_edge disagrees on " + format_set(s));
          ++additions;
        }
      }
    }
    auto all = canonical_edges(s);
    if (all.size() > 16) continue;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> sub;
      for (std::size_t e = 0; e < all.size(); ++e) {
        if ((mask >> e) & 1u) sub.push_back(all[e]);
      }
      bool expected = verify_realization(LabeledGraph(s, sub), r.landmarks(), s).ok();
      c.expect(descent_realizes(s, sub) == expected, "descent_realizes disagrees on " + format_set(s));
      ++subsets;
    }
  }
  c.notes.push_back(std::to_string(removals) + " removals, " + std::to_string(additions) + " additions, " +
                    std::to_string(subsets) + " edge subsets checked");
}

sat::CnfFormula random_formula(std::mt19937_64& rng) {
  sat::CnfFormula f;
  f.num_vars = 1 + rng() % 3;
  auto m = 1 + rng() % 4;
  for (std::size_t j = 0; j < m; ++j) {
    sat::Clause clause;
    auto len = 1 + rng() % 3;
    for (std::size_t k = 0; k < len; ++k) {
      auto var = static_cast<sat::Literal>(1 + rng() % f.num_vars);
      clause.push_back(rng() % 2 ? var : -var);
    }
    f.clauses.push_back(clause);
  }
  return f;
}

void criterion_reduction(Criterion& c) {
  auto start = Clock::now();
  std::mt19937_64 rng(3141);
  std::vector<sat::CnfFormula> formulas{{2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}}, {2, {{1, 2}, {-1, 2}}}};
  // Keep drawing until there are 30 formulas; at most 20 of them satisfiable.
  std::size_t sat_drawn = 0;
  while (formulas.size() < 30) {
    auto n = sat::normalize_formula(random_formula(rng));
    if (n.verdict != sat::NormalizedFormula::Verdict::kReduced) continue;
    if (sat::brute_force_sat(n.formula)) {
      if (sat_drawn == 20) continue;
      ++sat_drawn;
    }
    formulas.push_back(n.formula);
  }

  std::size_t sat_count = 0, unsat_count = 0;
  for (const auto& input : formulas) {
    auto normalized = sat::normalize_formula(input);
    if (normalized.verdict != sat::NormalizedFormula::Verdict::kReduced) {
      c.expect(false, "formula is not normalized:\n" + sat::to_dimacs(input));
      continue;
    }
    const auto& f = normalized.formula;
    const auto n = f.num_vars, m = f.clauses.size();
    c.expect(n <= 3 && m <= 4, "formula too large");
    auto inst = sat::reduce_3sat(normalized);
    std::size_t literals = 0;
    for (const auto& clause : f.clauses) literals += clause.size();
    auto g0 = sat::witness_graph_g0(inst);
    auto tag = sat::to_dimacs(f);
    c.expect(inst.set.size() == 3 * n + m + 2, "|S| wrong for\n" + tag);
    c.expect(inst.set.dim() == n + m + 1, "dimension wrong for\n" + tag);
    c.expect(inst.bound_k == 5 * n + literals, "k wrong for\n" + tag);
    c.expect(g0.edge_count() == inst.bound_k + n, "|E(G0)| wrong for\n" + tag);
    c.expect(verify_realization(g0.graph(), g0.landmarks(), inst.set).ok(), "G0 does not verify for\n" + tag);

    bool satisfiable = sat::brute_force_sat(f).has_value();
    (satisfiable ? sat_count : unsat_count)++;
    auto minimum = minimum_edges(inst.set);
    c.expect((minimum.count <= inst.bound_k) == satisfiable,
             "minimum " + std::to_string(minimum.count) + " vs k " + std::to_string(inst.bound_k) + " for\n" + tag);

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      sat::Assignment a(n);
      for (std::size_t v = 0; v < n; ++v) a[v] = (mask >> v) & 1u;
      if (!sat::satisfies(f, a)) continue;
      auto decoded = sat::decode_assignment(inst, sat::satisfying_graph(inst, a));
      c.expect(decoded == a, "decode(satisfying_graph(a)) != a for\n" + tag);
    }
  }
  c.expect(sat_count > 0 && unsat_count > 0, "sample lacks satisfiable or unsatisfiable formulas");
  c.notes.push_back(std::to_string(formulas.size()) + " formulas: " + std::to_string(sat_count) + " satisfiable, " +
                    std::to_string(unsat_count) + " unsatisfiable");
  auto elapsed = seconds_since(start);
  c.expect(elapsed < 180.0, "took " + std::to_string(elapsed) + " s");
}

void criterion_determinism(Criterion& c) {
  std::vector<VectorSet> sets{star_set(), cycle_set(), twin_minimum_set(), tree_set()};
  std::mt19937_64 rng(577);
  for (int k = 0; k < 10; ++k) sets.push_back(random_realizable_set(rng, 14, 3));
  sets.push_back(sat::reduce_3sat(sat::normalize_formula({3, {{1, 2, 3}, {-1, -2}, {-2, -3}, {1, -3}}})).set);

  for (const auto& s : sets) {
    auto reference = io::format_graph(minimum_edges(s).witness.graph());
    for (int workers : {1, 1, 2, 4, 8}) {
      auto again = io::format_graph(minimum_edges(s, {workers}).witness.graph());
      c.expect(again == reference, "minimum_edges witness differs with " + std::to_string(workers) +
                                       " workers on " + format_set(s));
    }
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      auto first = io::format_graph(minimize_greedy(s, seed).graph());
      for (int k = 0; k < 3; ++k) {
        c.expect(io::format_graph(minimize_greedy(s, seed).graph()) == first,
                 "minimize_greedy differs across runs on " + format_set(s));
      }
    }
  }
}

}  // namespace

int main() {
  int failed = 0;
  failed += !report(1, "realizability of the example sets and their mutations", criterion_realizability);
  failed += !report(2, "minimum edges of the star set", criterion_minimum);
  failed += !report(3, "unique realizability", criterion_uniqueness);
  failed += !report(4, "non-equivalent minima", criterion_non_equivalent);
  failed += !report(5, "tree realizations", criterion_trees);
  failed += !report(6, "edit laws agree with re-verification", criterion_edit_laws);
  failed += !report(7, "3SAT reduction round trip", criterion_reduction);
  failed += !report(8, "determinism", criterion_determinism);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
