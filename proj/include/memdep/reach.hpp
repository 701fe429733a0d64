#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "memdep/graph.hpp"
#include "memdep/verdict.hpp"

namespace memdep {

/// Shortest edge count from the nearest source; unreachable nodes are absent.
std::map<NodeId, std::size_t> bfs_distances(const Digraph& g, const std::set<NodeId>& sources);

std::set<NodeId> reachable_from(const Digraph& g, const std::set<NodeId>& sources);

/// A directed cycle as a node sequence (first node not repeated), searching
/// only among `within` when given.
std::optional<std::vector<NodeId>> find_cycle(const Digraph& g,
                                              const std::set<NodeId>* within = nullptr);

bool solve_stcon(const Digraph& g, NodeId s, NodeId t);
bool solve_stcon(const StconInstance& inst);

/// Shortest path to yes against shortest path to no.
Verdict solve_general(const DependencyGraph& g);
/// Reachability of yes and no from the in-set; reachable cycles are NOT_HALTING.
Verdict solve_standard(const DependencyGraph& g);
/// Deterministic path following (lowest-named successor) from each in-node.
Verdict solve_restricted(const DependencyGraph& g);
Verdict solve(const DependencyGraph& g, Condition condition);

struct ObjectClasses {
  std::set<NodeId> o_yes;    // nodes from which yes is reachable
  std::set<NodeId> o_no;     // nodes from which no is reachable
  std::set<NodeId> o_other;  // the rest
};

ObjectClasses compute_object_classes(const DependencyGraph& g);

struct ConditionClass {
  bool acyclic = false;            // whole graph
  bool reachable_acyclic = false;  // part reachable from the in-set
  bool standard_ok = false;
  bool restricted_ok = false;
  bool lambda_free = false;
  std::vector<std::string> diagnostics;
};

/// Structural flags with witnesses. Nodes without edges that are neither in
/// the in-set nor yes/no are ignored by the restricted checks.
ConditionClass classify(const DependencyGraph& g);

}  // namespace memdep
