#include "metrel/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "metrel/io.hpp"
#include "metrel/minimization.hpp"
#include "metrel/realizability.hpp"
#include "metrel/satbridge.hpp"
#include "metrel/trees.hpp"
#include "metrel/verification.hpp"

namespace metrel::cli {

namespace {

void print_report(const RealizabilityReport& report, std::ostream& out) {
  out << "not realizable\n";
  for (const auto& v : report.violations) out << v.describe() << "\n";
  if (report.truncated) out << "(further violations omitted)\n";
}

std::string assignment_line(const sat::Assignment& a) {
  std::string line = "v";
  for (std::size_t v = 0; v < a.size(); ++v) {
    line += " " + std::string(a[v] ? "" : "-") + std::to_string(v + 1);
  }
  return line + " 0";
}

int cmd_check(const std::string& path, std::ostream& out) {
  auto s = io::parse_vector_set(io::read_file(path));
  auto report = check_realizable(s);
  if (!report.realizable) {
    print_report(report, out);
    return kNegative;
  }
  out << "realizable\n";
  return kAffirmative;
}

int cmd_canonical(const std::string& path, std::ostream& out) {
  auto r = canonical_realization(io::parse_vector_set(io::read_file(path)));
  out << io::format_graph(r.graph());
  return kAffirmative;
}

int cmd_minimize(const std::string& path, std::uint64_t seed, std::ostream& out) {
  auto r = minimize_greedy(io::parse_vector_set(io::read_file(path)), seed);
  out << io::format_graph(r.graph(), {"minimal realization, seed " + std::to_string(seed) + ", " +
                                      std::to_string(r.edge_count()) + " edges"});
  return kAffirmative;
}

int cmd_enumerate(const std::string& path, const EnumerationLimits& limits, std::ostream& out) {
  auto all = enumerate_minimal(io::parse_vector_set(io::read_file(path)), limits);
  out << "# " << all.size() << " minimal realizations\n";
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (k) out << "---\n";
    out << io::format_graph(all[k].graph(), {"realization " + std::to_string(k + 1) + ", " +
                                             std::to_string(all[k].edge_count()) + " edges"});
  }
  return kAffirmative;
}

int cmd_minimum(const std::string& path, std::optional<std::size_t> k, int workers, std::ostream& out) {
  auto s = io::parse_vector_set(io::read_file(path));
  SearchOptions options{workers};
  if (k) {
    bool yes = bmetrel_decide(s, *k, options);
    out << (yes ? "yes" : "no") << "\n";
    return yes ? kAffirmative : kNegative;
  }
  auto result = minimum_edges(s, options);
  out << result.count << "\n" << io::format_graph(result.witness.graph());
  return kAffirmative;
}

int cmd_unique(const std::string& path, std::ostream& out) {
  bool unique = is_uniquely_realizable(io::parse_vector_set(io::read_file(path)));
  out << (unique ? "unique" : "not unique") << "\n";
  return unique ? kAffirmative : kNegative;
}

int cmd_tree(const std::string& path, bool build, std::ostream& out) {
  auto s = io::parse_vector_set(io::read_file(path));
  auto verdict = tree_realizable(s);
  if (!verdict.realizable) {
    out << "not tree-realizable: " << verdict.describe() << "\n";
    return kNegative;
  }
  out << "tree-realizable\n";
  out << "unique realization: " << (uniquely_realizable_by_tree(s) ? "yes" : "no") << "\n";
  if (build) out << io::format_graph(build_tree_realization(s).graph());
  return kAffirmative;
}

std::vector<std::string> instance_comments(const sat::ReductionInstance& inst) {
  std::vector<std::string> comments{
      "bounded realization instance from 3SAT: " + std::to_string(inst.formula().num_vars) + " variables, " +
          std::to_string(inst.formula().clauses.size()) + " clauses",
      "bound " + std::to_string(inst.bound_k)};
  std::string roles = "roles";
  for (const auto& role : inst.roles) roles += " " + role.name();
  comments.push_back(roles);
  return comments;
}

// Returns the exit code for formulas settled by normalization, or nullopt.
std::optional<int> report_trivial(const sat::NormalizedFormula& nf, std::ostream& out) {
  using Verdict = sat::NormalizedFormula::Verdict;
  if (nf.verdict == Verdict::kTriviallyUnsat) {
    out << "trivially unsatisfiable\n";
    return kNegative;
  }
  if (nf.verdict == Verdict::kTriviallySat) {
    out << "trivially satisfiable\n" << assignment_line(nf.lift({})) << "\n";
    return kAffirmative;
  }
  return std::nullopt;
}

int cmd_reduce(const std::string& cnf_path, const std::string& out_path, std::ostream& out) {
  auto nf = sat::normalize_formula(sat::parse_dimacs(io::read_file(cnf_path)));
  if (auto code = report_trivial(nf, out)) return *code;
  auto inst = sat::reduce_3sat(nf);
  auto text = io::format_vector_set(inst.set, instance_comments(inst));
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!(file << text)) throw Error("cannot write " + out_path);
    out << "bound " << inst.bound_k << "\n";
  }
  return kAffirmative;
}

int cmd_decode(const std::string& cnf_path, const std::string& graph_path, std::ostream& out) {
  auto formula = sat::parse_dimacs(io::read_file(cnf_path));
  auto nf = sat::normalize_formula(formula);
  if (auto code = report_trivial(nf, out)) return *code;
  auto inst = sat::reduce_3sat(nf);
  auto g = io::parse_graph(io::read_file(graph_path));
  if (!(g.vertices() == inst.set)) throw FormatError("graph is not over the instance's vector set");
  auto landmarks = *inst.set.landmarks();
  auto report = verify_realization(g, landmarks, inst.set);
  if (!report.ok()) {
    out << "not a realization: " << report.describe() << "\n";
    return kNegative;
  }
  if (g.edge_count() > inst.bound_k) {
    out << "over budget: " << g.edge_count() << " edges, bound " << inst.bound_k << "\n";
    return kNegative;
  }
  auto assignment = sat::decode_assignment(inst, Realization::from_graph(g));
  out << (sat::satisfies(formula, assignment) ? "satisfiable" : "decoded assignment fails the formula") << "\n"
      << assignment_line(assignment) << "\n";
  return sat::satisfies(formula, assignment) ? kAffirmative : kNegative;
}

int cmd_verify(const std::string& set_path, const std::string& graph_path, std::ostream& out) {
  auto s = io::parse_vector_set(io::read_file(set_path));
  auto g = io::parse_graph(io::read_file(graph_path));
  if (!(g.vertices() == s)) {
    out << "fail: graph vertices differ from the vector set\n";
    return kNegative;
  }
  auto landmarks = s.landmarks();
  if (!landmarks) {
    out << "fail: some coordinate has no unique zero-holder\n";
    return kNegative;
  }
  auto report = verify_realization(g, *landmarks, s);
  out << (report.ok() ? "ok" : "fail: " + report.describe()) << "\n";
  return report.ok() ? kAffirmative : kNegative;
}

int cmd_dot(const std::string& path, std::ostream& out) {
  out << io::to_dot(io::parse_graph(io::read_file(path)));
  return kAffirmative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric realizations of integer distance-vector sets", "metrel"};
  app.require_subcommand(1);

  std::string set_path, graph_path, cnf_path, out_path;
  std::uint64_t seed = 0;
  std::size_t max_vertices = EnumerationLimits{}.max_vertices;
  std::size_t max_edges = EnumerationLimits{}.max_canonical_edges;
  std::optional<std::size_t> bound;
  int workers = 1;
  bool build = false;

  auto* check = app.add_subcommand("check", "Realizability report");
  check->add_option("set", set_path)->required();
  auto* canonical = app.add_subcommand("canonical", "Canonical realization");
  canonical->add_option("set", set_path)->required();
  auto* minimize = app.add_subcommand("minimize", "Greedy minimal realization");
  minimize->add_option("set", set_path)->required();
  minimize->add_option("--seed", seed, "Edge scan permutation; 0 is lexicographic");
  auto* enumerate = app.add_subcommand("enumerate-minimal", "All minimal realizations");
  enumerate->add_option("set", set_path)->required();
  enumerate->add_option("--max-vertices", max_vertices);
  enumerate->add_option("--max-edges", max_edges, "Limit on canonical edges");
  auto* minimum = app.add_subcommand("minimum", "Minimum edge count, or decide a bound with --k");
  minimum->add_option("set", set_path)->required();
  minimum->add_option("--k", bound);
  minimum->add_option("--workers", workers)->check(CLI::Range(1, 256));
  auto* unique = app.add_subcommand("unique", "Unique realizability");
  unique->add_option("set", set_path)->required();
  auto* tree = app.add_subcommand("tree", "Tree realizability");
  tree->add_option("set", set_path)->required();
  tree->add_flag("--build", build, "Print the tree realization");
  auto* reduce = app.add_subcommand("reduce-sat", "Bounded realization instance of a 3SAT formula");
  reduce->add_option("cnf", cnf_path)->required();
  reduce->add_option("-o", out_path, "Write the vector set here");
  auto* decode = app.add_subcommand("decode-sat", "Read an assignment off a bounded realization");
  decode->add_option("cnf", cnf_path)->required();
  decode->add_option("graph", graph_path)->required();
  auto* verify = app.add_subcommand("verify", "Check that a graph realizes a set");
  verify->add_option("set", set_path)->required();
  verify->add_option("graph", graph_path)->required();
  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("graph", graph_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "metrel: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(set_path, out);
    if (canonical->parsed()) return cmd_canonical(set_path, out);
    if (minimize->parsed()) return cmd_minimize(set_path, seed, out);
    if (enumerate->parsed()) return cmd_enumerate(set_path, {max_vertices, max_edges}, out);
    if (minimum->parsed()) return cmd_minimum(set_path, bound, workers, out);
    if (unique->parsed()) return cmd_unique(set_path, out);
    if (tree->parsed()) return cmd_tree(set_path, build, out);
    if (reduce->parsed()) return cmd_reduce(cnf_path, out_path, out);
    if (decode->parsed()) return cmd_decode(cnf_path, graph_path, out);
    if (verify->parsed()) return cmd_verify(set_path, graph_path, out);
    if (dot->parsed()) return cmd_dot(graph_path, out);
  } catch (const NotRealizableError& e) {
    print_report(e.report(), out);
    return kNegative;
  } catch (const std::exception& e) {
    err << "metrel: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace metrel::cli
