#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "memdep/multiset.hpp"
#include "memdep/system.hpp"
#include "memdep/verdict.hpp"

namespace memdep {

/// One membrane in a configuration. The root instance is the environment.
struct MembraneInstance {
  LabelId label;
  Multiset contents;
  std::vector<MembraneInstance> children;

  bool operator==(const MembraneInstance&) const = default;
};

struct Configuration {
  MembraneInstance root{env_label(), {}, {}};
  std::size_t step = 0;

  const Multiset& environment() const noexcept { return root.contents; }
  std::size_t membrane_count() const;

  bool operator==(const Configuration&) const = default;
};

/// Order-insensitive textual key: sibling instances are sorted, so two
/// configurations differing only in sibling order share a key. Excludes step.
std::string canonical_key(const MembraneInstance& root);

/// Full nested dump, e.g. `[env{yes} [skin{a^2} [h{}]]]`.
std::string format_configuration(const Configuration& cfg);

enum class Scheduler { Lex, Exhaustive };
enum class HaltReason { Halted, StepLimit, PopulationCap };

std::string_view to_string(HaltReason reason);

struct Limits {
  std::size_t step_limit = 10'000;
  Multiset::Count population_cap = 1'000'000;  // per membrane instance
  std::size_t membrane_cap = 100'000;           // instances per configuration
};

/// A rule applicable in a configuration. `path` lists child indices from the
/// root to the subject instance: the membrane carrying the rule's label (for
/// send-in rules, the membrane entered; the object sits in its parent).
struct Application {
  std::vector<std::size_t> path;
  std::size_t rule_index = 0;

  bool operator==(const Application&) const = default;
  auto operator<=>(const Application&) const = default;
};

/// Throws Error(UnsupportedRule) if the system contains a dissolution rule.
std::vector<Application> applicable_rules(const Configuration& cfg, const MembraneSystem& sys);

/// Builds the initial configuration from the structure, the per-label
/// contents and the input (placed into every membrane labelled input_label).
Configuration initial_configuration(const MembraneSystem& sys, const Multiset& input = {});

struct Transition {
  Configuration next;
  Multiset emitted;  // products delivered into the environment during the step
};

/// One maximally parallel step. Exhaustive picks the first successor in
/// canonical-key order. A halted configuration is returned unchanged.
/// Throws Error(PopulationCap) when a limit in `limits` is exceeded.
Transition step(const Configuration& cfg, const MembraneSystem& sys, Scheduler scheduler,
                const Limits& limits = {});

/// Every maximally parallel successor, deduplicated by canonical key and
/// sorted by it. Throws Error(LimitExceeded) past `max_successors`.
std::vector<Transition> successors(const Configuration& cfg, const MembraneSystem& sys,
                                   const Limits& limits = {},
                                   std::size_t max_successors = 100'000);

struct ComputationTrace {
  std::vector<Configuration> configurations;
  /// emissions[k]: objects released into the environment by step k;
  /// emissions[0] holds the initial environment contents.
  std::vector<Multiset> emissions;
  bool halted = false;
  HaltReason halt_reason = HaltReason::Halted;
  ObjectId yes{"yes"};
  ObjectId no{"no"};

  std::size_t final_step() const noexcept {
    return configurations.empty() ? 0 : configurations.size() - 1;
  }
  std::optional<std::size_t> first_emission(const ObjectId& object) const;
  /// Steps at which `object` was released, ascending.
  std::vector<std::size_t> emission_steps(const ObjectId& object) const;
};

ComputationTrace run(const MembraneSystem& sys, const Multiset& input = {},
                     Scheduler scheduler = Scheduler::Lex, const Limits& limits = {});

/// What a verdict depends on, extracted from a trace or an exploration path.
struct EmissionSummary {
  std::optional<std::size_t> first_yes;
  std::optional<std::size_t> first_no;
  bool halted = false;
  HaltReason halt_reason = HaltReason::Halted;
  std::size_t final_step = 0;
  /// The last configuration holds nothing but yes and no objects.
  bool only_signals_left = true;
};

EmissionSummary summarize(const ComputationTrace& trace);

/// Throws Error(NotHalted) for Standard/Restricted on unfinished summaries.
Verdict judge(const EmissionSummary& summary, Condition condition);
Verdict judge(const ComputationTrace& trace, Condition condition);

/// Warnings about yes/no released more than once.
std::vector<std::string> repeated_signals(const ComputationTrace& trace);

struct ExploreLimits {
  std::size_t max_steps = 10'000;
  std::size_t max_configs = 100'000;
};

struct ExploreResult {
  std::map<Condition, std::set<Verdict>> verdicts;
  std::size_t configs_visited = 0;

  bool confluent(Condition condition) const { return verdicts.at(condition).size() == 1; }
};

/// Explores every maximally parallel schedule. Paths still running at
/// max_steps contribute their General verdict (if a signal was released) or
/// Violation(StepLimit). Throws Error(LimitExceeded) past max_configs.
ExploreResult explore_all(const MembraneSystem& sys, const Multiset& input = {},
                          const ExploreLimits& explore = {}, const Limits& limits = {});

}  // namespace memdep
