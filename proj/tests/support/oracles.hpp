#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library's solvers.

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "memdep/graph.hpp"
#include "memdep/verdict.hpp"

namespace memdep::oracle {

/// Shortest distances by enumerating every simple path from every source.
std::map<NodeId, std::size_t> path_enum_distances(const Digraph& g, const std::set<NodeId>& sources);

/// Reflexive transitive closure by Floyd-Warshall.
std::vector<std::vector<bool>> closure(const Digraph& g);

/// Some node lies on a cycle (of length >= 1).
bool has_cycle(const Digraph& g);

Verdict general(const DependencyGraph& g);
Verdict standard(const DependencyGraph& g);

/// Nodes that can reach `target` (closure based).
std::set<NodeId> can_reach(const Digraph& g, NodeId target);

/// Every digraph on nodes v0..v{n-1}; bit i*n+j of the mask selects edge i->j.
Digraph digraph_from_mask(std::size_t n, unsigned long mask);

/// Every labelled DAG on n nodes (n <= 4).
std::vector<Digraph> all_dags(std::size_t n, const std::string& prefix);

}  // namespace memdep::oracle
