#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "memdep/graph.hpp"

namespace memdep {

/// Two s-t instances over disjoint node names.
struct PromisePair {
  StconInstance g;
  StconInstance g_prime;
};

/// s becomes `in`, t becomes `yes`; a fresh `no` hangs off a padding chain of
/// |V|+1 edges from `in`. Cycles are allowed.
DependencyGraph reduce_stcon_to_general(const StconInstance& inst);

/// True iff exactly one of the two components has its s-t path.
bool verify_promise(const PromisePair& pair);

/// Fresh `in` with edges to s and s'; chains of N+1 edges t -> ... -> yes and
/// t' -> ... -> no, N being the combined node count. Throws
/// Error(MalformedInstance) for shared names or cycles and
/// Error(PromiseViolated) when the promise fails.
DependencyGraph reduce_stcon_pair_to_standard(const PromisePair& pair);

/// Throws Error(MalformedForest) unless every out-degree is at most 1 and the
/// graph is acyclic.
void check_forest(const StconInstance& forest);

/// Removes t's outgoing edge, renames s to `in`, adds a chain of |V|+1 edges
/// from t to yes and routes every other sink to a fresh `no`.
DependencyGraph reduce_dfa_to_restricted(const StconInstance& forest);

using Rng = std::mt19937_64;

/// Nodes v0..v{n-1}; every ordered pair (self-loops excluded) is an edge with
/// probability `density`. s and t drawn uniformly.
StconInstance random_digraph(Rng& rng, std::size_t nodes, double density);

/// Like random_digraph, but only edges from lower to higher positions of a
/// random node order, so the result is acyclic.
StconInstance random_dag(Rng& rng, std::size_t nodes, double density);

/// Out-degree at most 1, acyclic; 1..max_nodes nodes.
StconInstance random_forest(Rng& rng, std::size_t max_nodes);

}  // namespace memdep
