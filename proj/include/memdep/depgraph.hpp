#pragma once

#include <string>
#include <string_view>

#include "memdep/graph.hpp"
#include "memdep/multiset.hpp"
#include "memdep/system.hpp"

namespace memdep {

/// `object@label`.
std::string dep_node_name(const ObjectId& object, const LabelId& label);

/// Dependency graph over Gamma x (labels occurring in the structure). The
/// in-set holds every initially present (object, label) pair plus the input
/// at the input membrane. Throws Error(DissolutionPresent) and
/// Error(InvalidSystem) for input objects outside the alphabet.
DependencyGraph build_dependency_graph(const MembraneSystem& sys, const Multiset& input = {});

/// Single-membrane system with one rule `[v -> S(v)]_env` per non-sink node
/// and the in-set as initial environment contents.
MembraneSystem graph_to_system(const DependencyGraph& g);

/// graph_to_system(build_dependency_graph(sys, input)).
MembraneSystem normalize(const MembraneSystem& sys, const Multiset& input = {});

/// Node name with every trailing `@env` removed, so `a@h@env` and `a@h` agree.
std::string canonical_node_name(std::string_view name);

/// Equality after canonical renaming of both graphs. When the renaming would
/// merge two nodes of one graph, the literal names are compared instead.
bool graphs_equal_canonical(const DependencyGraph& a, const DependencyGraph& b);

}  // namespace memdep
