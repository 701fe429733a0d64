#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace memdep {

using NodeId = std::size_t;

/// Directed graph over named nodes. Node ids are dense and assigned in
/// insertion order; parallel edges collapse.
class Digraph {
 public:
  /// Returns the id of `name`, creating the node if needed.
  NodeId add_node(std::string_view name);
  /// Returns true if the edge was new.
  bool add_edge(NodeId from, NodeId to);
  void remove_out_edges(NodeId from);

  std::optional<NodeId> find(std::string_view name) const;
  /// Like find, but throws Error(NotFound).
  NodeId at(std::string_view name) const;

  std::size_t node_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::string& name(NodeId id) const { return names_.at(id); }
  /// Successor ids in ascending id order.
  const std::vector<NodeId>& successors(NodeId id) const { return succ_.at(id); }
  std::size_t out_degree(NodeId id) const { return succ_.at(id).size(); }
  bool has_edge(NodeId from, NodeId to) const;

  std::vector<std::pair<NodeId, NodeId>> edges() const;
  std::vector<std::vector<NodeId>> predecessors() const;
  /// Node ids sorted by name.
  std::vector<NodeId> ids_by_name() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, NodeId, std::less<>> index_;
  std::vector<std::vector<NodeId>> succ_;
  std::size_t edge_count_ = 0;
};

/// Dependency graph (V, E, in, yes, no) over object/label pairs.
struct DependencyGraph {
  Digraph graph;
  std::set<NodeId> in_set;
  NodeId yes_node = 0;
  NodeId no_node = 0;
};

/// Name-based equality: same node names, edges, in-set and distinguished nodes,
/// regardless of internal id assignment.
bool operator==(const DependencyGraph& a, const DependencyGraph& b);

/// Plain s-t reachability instance.
struct StconInstance {
  Digraph graph;
  NodeId s = 0;
  NodeId t = 0;
};

}  // namespace memdep
