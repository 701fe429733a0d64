#include "memdep/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "memdep/depgraph.hpp"
#include "memdep/error.hpp"
#include "memdep/reach.hpp"
#include "memdep/reductions.hpp"
#include "memdep/simulator.hpp"
#include "memdep/textio.hpp"

namespace memdep::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::NotFound, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw Error(ErrorCode::NotFound, "cannot write '" + path + "'");
}

int exit_for(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::Accept: return kAccept;
    case Outcome::Reject: return kReject;
    case Outcome::Violation: return kViolation;
  }
  return kViolation;
}

int report(const Verdict& v, std::ostream& out) {
  out << to_string(v) << '\n' << verdict_line(v) << '\n';
  return exit_for(v);
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::InvalidSystem:
    case ErrorCode::UndeclaredNode:
    case ErrorCode::MissingDistinguished:
    case ErrorCode::NotFound:
      return true;
    default:
      return false;
  }
}

std::size_t default_step_limit() {
  if (const char* env = std::getenv("MEMDEP_MAX_STEPS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return Limits{}.step_limit;
}

/// Verdict of a finished or unfinished trace; unfinished runs under
/// standard/restricted report the reason they stopped.
Verdict verdict_of(const ComputationTrace& trace, Condition c) {
  if (c != Condition::General && !trace.halted) {
    return Verdict::violation(trace.halt_reason == HaltReason::PopulationCap
                                  ? ViolationCode::PopulationCap
                                  : ViolationCode::StepLimit);
  }
  return judge(trace, c);
}

void print_trace(const ComputationTrace& trace, bool verbose, std::ostream& out) {
  for (std::size_t k = 0; k < trace.emissions.size(); ++k) {
    out << "step " << k << ": +env{" << format_multiset_compact(trace.emissions[k]) << "}\n";
    if (verbose) out << "  " << format_configuration(trace.configurations[k]) << '\n';
  }
  out << "halt: " << to_string(trace.halt_reason) << " after " << trace.final_step()
      << " steps\n";
}

std::string verdict_set(const std::set<Verdict>& verdicts) {
  std::string out = "{";
  for (const auto& v : verdicts) {
    if (out.size() > 1) out += ',';
    switch (v.outcome) {
      case Outcome::Accept: out += "Accept"; break;
      case Outcome::Reject: out += "Reject"; break;
      case Outcome::Violation: out += "Violation(" + std::string(to_string(v.code)) + ")"; break;
    }
  }
  return out + "}";
}

struct Options {
  std::string file;
  std::vector<std::string> files;
  std::string condition = "general";
  std::string scheduler = "lex";
  std::string output;
  std::string dot;
  std::string input;
  std::string kind;
  std::optional<std::size_t> max_steps;
  Multiset::Count population_cap = Limits{}.population_cap;
  std::size_t max_configs = ExploreLimits{}.max_configs;
  std::size_t sweep = 0;
  std::uint64_t seed = 1;
  std::size_t max_nodes = 8;
  bool verbose = false;
  bool prune = false;
  bool check = false;
  bool verify = false;
  bool no_explore = false;

  Condition cond() const { return *parse_condition(condition); }
  Limits limits() const {
    Limits l;
    l.step_limit = max_steps ? *max_steps : default_step_limit();
    l.population_cap = population_cap;
    return l;
  }
};

MembraneSystem load_system(const std::string& path) { return parse_system(read_file(path)); }

DependencyGraph load_graph(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  auto g = parse_graph(read_file(path), &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return g;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto sys = load_system(o.file);
  const auto trace = memdep::run(sys, Multiset::parse_words(o.input),
                                 o.scheduler == "exhaustive" ? Scheduler::Exhaustive
                                                             : Scheduler::Lex,
                                 o.limits());
  print_trace(trace, o.verbose, out);
  for (const auto& w : repeated_signals(trace)) err << "warning: " << w << '\n';
  return report(verdict_of(trace, o.cond()), out);
}

int cmd_depgraph(const Options& o, std::ostream& out, std::ostream&) {
  const auto sys = load_system(o.file);
  const auto g = build_dependency_graph(sys, Multiset::parse_words(o.input));
  write_output(o.output, serialize_graph(g), out);
  if (!o.dot.empty()) write_output(o.dot, emit_dot(g, DotOptions{o.prune}), out);
  if (o.check) {
    const bool ok = graphs_equal_canonical(build_dependency_graph(graph_to_system(g)), g);
    out << (ok ? "CHECK ok" : "CHECK failed: graph round-trip differs") << '\n';
    if (!ok) return kViolation;
  }
  return 0;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(o.file, err);
  if (o.cond() == Condition::General) {
    const auto dist = bfs_distances(g.graph, g.in_set);
    auto show = [&](const char* what, NodeId v) {
      out << "distance " << what << ": ";
      if (auto it = dist.find(v); it != dist.end()) {
        out << it->second << '\n';
      } else {
        out << "unreachable\n";
      }
    };
    show("yes", g.yes_node);
    show("no", g.no_node);
  }
  return report(solve(g, o.cond()), out);
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(o.file, err);
  const auto c = classify(g);
  const auto classes = compute_object_classes(g);
  auto flag = [&](const char* name, bool v) { out << name << '=' << (v ? "true" : "false") << '\n'; };
  flag("acyclic", c.acyclic);
  flag("reachable_acyclic", c.reachable_acyclic);
  flag("standard_ok", c.standard_ok);
  flag("restricted_ok", c.restricted_ok);
  flag("lambda_free", c.lambda_free);
  out << "o_yes=" << classes.o_yes.size() << " o_no=" << classes.o_no.size()
      << " o_other=" << classes.o_other.size() << '\n';
  for (const auto& d : c.diagnostics) out << "witness: " << d << '\n';
  return 0;
}

int cmd_normalize(const Options& o, std::ostream& out, std::ostream&) {
  const auto sys = load_system(o.file);
  const auto input = Multiset::parse_words(o.input);
  const auto normal = normalize(sys, input);
  write_output(o.output, serialize_system(normal), out);
  if (o.check) {
    const bool ok = graphs_equal_canonical(build_dependency_graph(sys, input),
                                           build_dependency_graph(normal));
    out << (ok ? "CHECK ok" : "CHECK failed: dependency graphs differ") << '\n';
    if (!ok) return kViolation;
  }
  return 0;
}

int cmd_crosscheck(const Options& o, std::ostream& out, std::ostream&) {
  const auto sys = load_system(o.file);
  const auto input = Multiset::parse_words(o.input);
  const Condition c = o.cond();
  const auto trace = memdep::run(sys, input, Scheduler::Lex, o.limits());
  const Verdict simulated = verdict_of(trace, c);
  const Verdict solved = solve(build_dependency_graph(sys, input), c);

  if (!o.no_explore) {
    ExploreLimits el;
    el.max_steps = o.limits().step_limit;
    el.max_configs = o.max_configs;
    const auto explored = explore_all(sys, input, el, o.limits());
    const auto& set = explored.verdicts.at(c);
    if (set.size() > 1) {
      out << "NON-CONFLUENT " << verdict_set(set) << '\n';
      return kViolation;
    }
  }
  if (simulated == solved) {
    out << "AGREE " << to_string(simulated) << '\n' << verdict_line(simulated) << '\n';
    return kAccept;
  }
  out << "DISAGREE simulator=" << to_string(simulated) << " solver=" << to_string(solved) << '\n';
  print_trace(trace, true, out);
  return kViolation;
}

StconInstance primed(const StconInstance& inst) {
  StconInstance out;
  for (NodeId v = 0; v < inst.graph.node_count(); ++v) out.graph.add_node(inst.graph.name(v) + "'");
  for (auto [u, v] : inst.graph.edges()) out.graph.add_edge(u, v);
  out.s = inst.s;
  out.t = inst.t;
  return out;
}

/// Reduces one instance and checks the solver against plain reachability.
/// Returns an empty string on success, otherwise what went wrong.
std::string verify_reduction(const std::string& kind, const std::vector<StconInstance>& in,
                             DependencyGraph* result) {
  DependencyGraph g;
  bool expected = false;
  Verdict got;
  std::string extra;
  if (kind == "stcon-general") {
    g = reduce_stcon_to_general(in[0]);
    expected = solve_stcon(in[0]);
    got = solve_general(g);
  } else if (kind == "stcon-pair-standard") {
    g = reduce_stcon_pair_to_standard({in[0], in[1]});
    expected = solve_stcon(in[0]);
    got = solve_standard(g);
    if (!classify(g).standard_ok) extra = "output is not standard_ok";
  } else {
    g = reduce_dfa_to_restricted(in[0]);
    expected = solve_stcon(in[0]);
    got = solve_restricted(g);
    if (!classify(g).restricted_ok) extra = "output is not restricted_ok";
  }
  if (result != nullptr) *result = g;
  const Verdict want = expected ? Verdict::accept() : Verdict::reject();
  if (got != want) return "solver says " + to_string(got) + ", reachability says " + to_string(want);
  return extra;
}

std::vector<StconInstance> random_instances(const std::string& kind, Rng& rng,
                                            std::size_t max_nodes) {
  auto nodes = [&] { return 1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(max_nodes, 1)); };
  if (kind == "stcon-general") return {random_digraph(rng, nodes(), 0.3)};
  if (kind == "dfa-restricted") return {random_forest(rng, max_nodes)};
  const std::size_t half = std::max<std::size_t>(max_nodes / 2, 1);
  while (true) {
    auto a = random_dag(rng, 1 + rng() % half, 0.4);
    auto b = primed(random_dag(rng, 1 + rng() % half, 0.4));
    if (verify_promise({a, b})) return {a, b};
  }
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  const bool pair = o.kind == "stcon-pair-standard";
  if (o.sweep > 0) {
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.sweep; ++i) {
      const auto inst = random_instances(o.kind, rng, o.max_nodes);
      const auto problem = verify_reduction(o.kind, inst, nullptr);
      if (!problem.empty()) {
        out << "MISMATCH instance=" << i << " seed=" << o.seed << ": " << problem << '\n';
        for (const auto& x : inst) out << serialize_stcon(x);
        return kViolation;
      }
    }
    out << "OK n=" << o.sweep << " seed=" << o.seed << '\n';
    return 0;
  }

  const std::size_t want = pair ? 2 : 1;
  if (o.files.size() != want) {
    err << "error: " << o.kind << " takes " << want << " input file" << (pair ? "s" : "")
        << " (or --sweep N)\n";
    return kInputError;
  }
  std::vector<StconInstance> inst;
  for (const auto& f : o.files) inst.push_back(parse_stcon(read_file(f)));

  DependencyGraph g;
  std::string problem;
  if (o.verify) {
    problem = verify_reduction(o.kind, inst, &g);
  } else if (o.kind == "stcon-general") {
    g = reduce_stcon_to_general(inst[0]);
  } else if (pair) {
    g = reduce_stcon_pair_to_standard({inst[0], inst[1]});
  } else {
    g = reduce_dfa_to_restricted(inst[0]);
  }
  write_output(o.output, serialize_graph(g), out);
  if (o.verify) {
    out << (problem.empty() ? "# verify: ok" : "# verify: MISMATCH " + problem) << '\n';
    if (!problem.empty()) return kViolation;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Membrane-system dependency graphs: simulate, compile, classify, solve, reduce",
               "memdep"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> conditions{"general", "standard", "restricted"};

  auto add_condition = [&](CLI::App* cmd) {
    cmd->add_option("-c,--condition", o.condition, "Acceptance condition")
        ->check(CLI::IsMember(conditions))
        ->capture_default_str();
  };
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-steps", o.max_steps,
                    "Step limit (default 10000, or MEMDEP_MAX_STEPS)");
    cmd->add_option("--population-cap", o.population_cap, "Objects allowed per membrane")
        ->capture_default_str();
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", o.input, "Input multiset, e.g. \"a a b\"");
  };

  auto* simulate = app.add_subcommand("simulate", "Run a .pms system and judge the trace");
  simulate->add_option("file", o.file, "System file (.pms)")->required();
  add_condition(simulate);
  add_limits(simulate);
  add_input(simulate);
  simulate->add_option("--scheduler", o.scheduler, "lex or exhaustive")
      ->check(CLI::IsMember({"lex", "exhaustive"}))
      ->capture_default_str();
  simulate->add_flag("-v,--verbose", o.verbose, "Dump every configuration");

  auto* depgraph = app.add_subcommand("depgraph", "Compile a .pms system to a .dg graph");
  depgraph->add_option("file", o.file, "System file (.pms)")->required();
  depgraph->add_option("-o,--output", o.output, "Graph file (default stdout)");
  depgraph->add_option("--dot", o.dot, "Also write Graphviz DOT");
  depgraph->add_flag("--prune", o.prune, "Omit isolated nodes from DOT");
  depgraph->add_flag("--check", o.check, "Verify the graph/system round trip");
  add_input(depgraph);

  auto* solve_cmd = app.add_subcommand("solve", "Decide a .dg graph under a condition");
  solve_cmd->add_option("file", o.file, "Graph file (.dg)")->required();
  add_condition(solve_cmd);

  auto* reduce = app.add_subcommand("reduce", "Build a reduction output from s-t instances");
  reduce->add_option("kind", o.kind, "stcon-general | stcon-pair-standard | dfa-restricted")
      ->required()
      ->check(CLI::IsMember({"stcon-general", "stcon-pair-standard", "dfa-restricted"}));
  reduce->add_option("inputs", o.files, "Instance files (@nodes/@edges/@s/@t)");
  reduce->add_option("-o,--output", o.output, "Graph file (default stdout)");
  reduce->add_flag("--verify", o.verify, "Compare the solver with plain reachability");
  reduce->add_option("--sweep", o.sweep, "Verify N random instances instead of reading files");
  reduce->add_option("--seed", o.seed, "Seed for --sweep")->capture_default_str();
  reduce->add_option("--max-nodes", o.max_nodes, "Largest random instance")
      ->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Report structural flags of a .dg graph");
  classify_cmd->add_option("file", o.file, "Graph file (.dg)")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite a system to single-membrane form");
  normalize_cmd->add_option("file", o.file, "System file (.pms)")->required();
  normalize_cmd->add_option("-o,--output", o.output, "System file (default stdout)");
  normalize_cmd->add_flag("--check", o.check, "Verify the dependency graphs agree");
  add_input(normalize_cmd);

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare simulation, solver and exploration");
  crosscheck->add_option("file", o.file, "System file (.pms)")->required();
  add_condition(crosscheck);
  add_limits(crosscheck);
  add_input(crosscheck);
  crosscheck->add_option("--max-configs", o.max_configs, "Exploration budget")
      ->capture_default_str();
  crosscheck->add_flag("--no-explore", o.no_explore, "Skip exhaustive exploration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*simulate) return cmd_simulate(o, out, err);
    if (*depgraph) return cmd_depgraph(o, out, err);
    if (*solve_cmd) return cmd_solve(o, out, err);
    if (*reduce) return cmd_reduce(o, out, err);
    if (*classify_cmd) return cmd_classify(o, out, err);
    if (*normalize_cmd) return cmd_normalize(o, out, err);
    if (*crosscheck) return cmd_crosscheck(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (is_input_error(e.code())) return kInputError;
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace memdep::cli
