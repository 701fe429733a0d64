#include "memdep/depgraph.hpp"

#include <map>
#include <set>

#include "memdep/error.hpp"
#include "memdep/textio.hpp"

namespace memdep {

std::string dep_node_name(const ObjectId& object, const LabelId& label) {
  return object.str() + "@" + label.str();
}

DependencyGraph build_dependency_graph(const MembraneSystem& sys, const Multiset& input) {
  for (const auto& r : sys.rules) {
    if (r.kind == RuleKind::Dissolve) {
      throw Error(ErrorCode::DissolutionPresent,
                  "rule " + std::to_string(r.index + 1) + " (" + format_rule(r) +
                      ") dissolves a membrane");
    }
  }
  const auto labels = structure_labels(sys);
  const auto parents = label_parents(sys);

  DependencyGraph g;
  for (const auto& h : labels) {
    for (const auto& o : sys.alphabet) g.graph.add_node(dep_node_name(o, h));
  }
  auto node = [&](const ObjectId& o, const LabelId& h) -> NodeId {
    if (auto id = g.graph.find(dep_node_name(o, h))) return *id;
    throw Error(ErrorCode::InvalidSystem,
                "object '" + o.str() + "' is not in the alphabet");
  };
  auto parent_of = [&](const LabelId& h) -> const LabelId& {
    auto it = parents.find(h);
    if (it == parents.end()) {
      throw Error(ErrorCode::InvalidSystem, "label '" + h.str() + "' has no parent membrane");
    }
    return it->second;
  };

  for (const auto& r : sys.rules) {
    const LabelId& h = r.label;
    if (!labels.contains(h)) continue;
    switch (r.kind) {
      case RuleKind::Evolve:
        for (const auto& [b, _] : r.rhs) g.graph.add_edge(node(r.lhs, h), node(b, h));
        break;
      case RuleKind::SendIn:
        g.graph.add_edge(node(r.lhs, parent_of(h)), node(r.first, h));
        break;
      case RuleKind::SendOut:
        g.graph.add_edge(node(r.lhs, h), node(r.first, parent_of(h)));
        break;
      case RuleKind::DivideElem:
      case RuleKind::DivideNonElem:
        g.graph.add_edge(node(r.lhs, h), node(r.first, h));
        g.graph.add_edge(node(r.lhs, h), node(r.second, h));
        break;
      case RuleKind::Dissolve:
        break;
    }
  }

  for (const auto& [h, contents] : sys.initial_contents) {
    if (!labels.contains(h)) continue;
    for (const auto& [o, _] : contents) g.in_set.insert(node(o, h));
  }
  if (!input.empty()) {
    if (!sys.input_label) {
      throw Error(ErrorCode::InvalidSystem, "input given but the system has no input membrane");
    }
    for (const auto& [o, _] : input) g.in_set.insert(node(o, *sys.input_label));
  }
  g.yes_node = node(sys.yes, env_label());
  g.no_node = node(sys.no, env_label());
  return g;
}

MembraneSystem graph_to_system(const DependencyGraph& g) {
  const auto& d = g.graph;
  MembraneSystem sys;
  sys.labels = {env_label()};
  for (NodeId v = 0; v < d.node_count(); ++v) sys.alphabet.insert(ObjectId{d.name(v)});
  Multiset in;
  for (NodeId v : g.in_set) in.add(ObjectId{d.name(v)});
  if (!in.empty()) sys.initial_contents.emplace(env_label(), std::move(in));
  for (NodeId v : d.ids_by_name()) {
    if (d.out_degree(v) == 0) continue;
    Multiset rhs;
    for (NodeId w : d.successors(v)) rhs.add(ObjectId{d.name(w)});
    sys.rules.push_back(Rule::evolve(env_label(), ObjectId{d.name(v)}, std::move(rhs)));
  }
  reindex_rules(sys);
  sys.yes = ObjectId{d.name(g.yes_node)};
  sys.no = ObjectId{d.name(g.no_node)};
  return sys;
}

MembraneSystem normalize(const MembraneSystem& sys, const Multiset& input) {
  return graph_to_system(build_dependency_graph(sys, input));
}

std::string canonical_node_name(std::string_view name) {
  constexpr std::string_view suffix = "@env";
  while (name.size() > suffix.size() && name.ends_with(suffix)) {
    name.remove_suffix(suffix.size());
  }
  return std::string(name);
}

namespace {

struct Canonical {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;
  std::set<std::string> in;
  std::string yes, no;

  bool operator==(const Canonical&) const = default;
};

std::optional<Canonical> canonicalize(const DependencyGraph& g, bool rename) {
  const auto& d = g.graph;
  std::vector<std::string> names(d.node_count());
  Canonical c;
  for (NodeId v = 0; v < d.node_count(); ++v) {
    names[v] = rename ? canonical_node_name(d.name(v)) : d.name(v);
    if (!c.nodes.insert(names[v]).second) return std::nullopt;
  }
  for (auto [u, v] : d.edges()) c.edges.emplace(names[u], names[v]);
  for (NodeId v : g.in_set) c.in.insert(names[v]);
  c.yes = names[g.yes_node];
  c.no = names[g.no_node];
  return c;
}

}  // namespace

bool graphs_equal_canonical(const DependencyGraph& a, const DependencyGraph& b) {
  auto ca = canonicalize(a, true);
  auto cb = canonicalize(b, true);
  if (ca && cb) return *ca == *cb;
  return *canonicalize(a, false) == *canonicalize(b, false);
}

}  // namespace memdep
