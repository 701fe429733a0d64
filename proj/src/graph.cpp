#include "memdep/graph.hpp"

#include <algorithm>
#include <tuple>

#include "memdep/error.hpp"

namespace memdep {

NodeId Digraph::add_node(std::string_view name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  const NodeId id = names_.size();
  names_.emplace_back(name);
  index_.emplace(std::string(name), id);
  succ_.emplace_back();
  return id;
}

bool Digraph::add_edge(NodeId from, NodeId to) {
  auto& out = succ_.at(from);
  if (to >= names_.size()) throw Error(ErrorCode::NotFound, "edge target out of range");
  auto pos = std::lower_bound(out.begin(), out.end(), to);
  if (pos != out.end() && *pos == to) return false;
  out.insert(pos, to);
  ++edge_count_;
  return true;
}

void Digraph::remove_out_edges(NodeId from) {
  auto& out = succ_.at(from);
  edge_count_ -= out.size();
  out.clear();
}

std::optional<NodeId> Digraph::find(std::string_view name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

NodeId Digraph::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorCode::NotFound, "no node named '" + std::string(name) + "'");
}

bool Digraph::has_edge(NodeId from, NodeId to) const {
  const auto& out = succ_.at(from);
  return std::binary_search(out.begin(), out.end(), to);
}

std::vector<std::pair<NodeId, NodeId>> Digraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < succ_.size(); ++u) {
    for (NodeId v : succ_[u]) out.emplace_back(u, v);
  }
  return out;
}

std::vector<std::vector<NodeId>> Digraph::predecessors() const {
  std::vector<std::vector<NodeId>> pred(names_.size());
  for (NodeId u = 0; u < succ_.size(); ++u) {
    for (NodeId v : succ_[u]) pred[v].push_back(u);
  }
  return pred;
}

std::vector<NodeId> Digraph::ids_by_name() const {
  std::vector<NodeId> out;
  out.reserve(names_.size());
  for (const auto& [_, id] : index_) out.push_back(id);
  return out;
}

namespace {

using NamedEdges = std::set<std::pair<std::string, std::string>>;

NamedEdges named_edges(const Digraph& g) {
  NamedEdges out;
  for (auto [u, v] : g.edges()) out.emplace(g.name(u), g.name(v));
  return out;
}

std::set<std::string> named_nodes(const Digraph& g) {
  std::set<std::string> out;
  for (NodeId id = 0; id < g.node_count(); ++id) out.insert(g.name(id));
  return out;
}

std::set<std::string> named_in(const DependencyGraph& g) {
  std::set<std::string> out;
  for (NodeId id : g.in_set) out.insert(g.graph.name(id));
  return out;
}

}  // namespace

bool operator==(const DependencyGraph& a, const DependencyGraph& b) {
  if (a.graph.node_count() != b.graph.node_count() ||
      a.graph.edge_count() != b.graph.edge_count()) {
    return false;
  }
  return a.graph.name(a.yes_node) == b.graph.name(b.yes_node) &&
         a.graph.name(a.no_node) == b.graph.name(b.no_node) &&
         named_nodes(a.graph) == named_nodes(b.graph) && named_in(a) == named_in(b) &&
         named_edges(a.graph) == named_edges(b.graph);
}

}  // namespace memdep
