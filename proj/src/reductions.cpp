#include "memdep/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "memdep/error.hpp"
#include "memdep/reach.hpp"

namespace memdep {

namespace {

/// Hands out names that avoid everything already taken.
class NamePool {
 public:
  void reserve(const std::string& name) { taken_.insert(name); }

  std::string fresh(const std::string& base) {
    std::string name = base;
    for (std::size_t k = 1; taken_.contains(name); ++k) name = base + "_" + std::to_string(k);
    taken_.insert(name);
    return name;
  }

 private:
  std::set<std::string> taken_;
};

/// Appends `length` edges from `from` through fresh `prefix<k>` nodes to `to`.
void add_chain(Digraph& g, NamePool& names, NodeId from, NodeId to, std::size_t length,
               const std::string& prefix) {
  NodeId cur = from;
  for (std::size_t k = 1; k < length; ++k) {
    const NodeId next = g.add_node(names.fresh(prefix + std::to_string(k)));
    g.add_edge(cur, next);
    cur = next;
  }
  g.add_edge(cur, to);
}

/// Copies `src` into `dst` under `rename`, returning old -> new ids.
std::vector<NodeId> copy_into(Digraph& dst, const Digraph& src,
                              const std::vector<std::string>& rename) {
  std::vector<NodeId> map(src.node_count());
  for (NodeId v : src.ids_by_name()) map[v] = dst.add_node(rename[v]);
  for (auto [u, v] : src.edges()) dst.add_edge(map[u], map[v]);
  return map;
}

std::vector<std::string> names_of(const Digraph& g) {
  std::vector<std::string> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) out[v] = g.name(v);
  return out;
}

}  // namespace

DependencyGraph reduce_stcon_to_general(const StconInstance& inst) {
  const Digraph& src = inst.graph;
  const std::size_t n = src.node_count();
  NamePool names;
  for (NodeId v = 0; v < n; ++v) {
    if (v != inst.s && v != inst.t) names.reserve(src.name(v));
  }
  auto rename = names_of(src);
  if (inst.s == inst.t) {
    rename[inst.s] = names.fresh("yes");
  } else {
    rename[inst.s] = names.fresh("in");
    rename[inst.t] = names.fresh("yes");
  }

  DependencyGraph out;
  const auto map = copy_into(out.graph, src, rename);
  const NodeId in = map[inst.s];
  out.yes_node = map[inst.t];
  out.no_node = out.graph.add_node(names.fresh("no"));
  out.in_set = {in};
  add_chain(out.graph, names, in, out.no_node, n + 1, "p");
  return out;
}

bool verify_promise(const PromisePair& pair) {
  return solve_stcon(pair.g) != solve_stcon(pair.g_prime);
}

DependencyGraph reduce_stcon_pair_to_standard(const PromisePair& pair) {
  const Digraph& a = pair.g.graph;
  const Digraph& b = pair.g_prime.graph;
  NamePool names;
  for (NodeId v = 0; v < a.node_count(); ++v) names.reserve(a.name(v));
  for (NodeId v = 0; v < b.node_count(); ++v) {
    if (a.find(b.name(v))) {
      throw Error(ErrorCode::MalformedInstance,
                  "node '" + b.name(v) + "' occurs in both components");
    }
    names.reserve(b.name(v));
  }
  if (find_cycle(a) || find_cycle(b)) {
    throw Error(ErrorCode::MalformedInstance, "both components must be acyclic");
  }
  if (!verify_promise(pair)) {
    throw Error(ErrorCode::PromiseViolated,
                solve_stcon(pair.g) ? "both components have an s-t path"
                                    : "neither component has an s-t path");
  }

  const std::size_t n = a.node_count() + b.node_count();
  DependencyGraph out;
  const auto map_a = copy_into(out.graph, a, names_of(a));
  const auto map_b = copy_into(out.graph, b, names_of(b));
  const NodeId in = out.graph.add_node(names.fresh("in"));
  out.yes_node = out.graph.add_node(names.fresh("yes"));
  out.no_node = out.graph.add_node(names.fresh("no"));
  out.in_set = {in};
  out.graph.add_edge(in, map_a[pair.g.s]);
  out.graph.add_edge(in, map_b[pair.g_prime.s]);
  add_chain(out.graph, names, map_a[pair.g.t], out.yes_node, n + 1, "p");
  add_chain(out.graph, names, map_b[pair.g_prime.t], out.no_node, n + 1, "q");
  return out;
}

void check_forest(const StconInstance& forest) {
  const Digraph& g = forest.graph;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.out_degree(v) > 1) {
      throw Error(ErrorCode::MalformedForest,
                  "node '" + g.name(v) + "' has out-degree " + std::to_string(g.out_degree(v)));
    }
  }
  if (auto cycle = find_cycle(g)) {
    throw Error(ErrorCode::MalformedForest, "cycle through '" + g.name(cycle->front()) + "'");
  }
}

DependencyGraph reduce_dfa_to_restricted(const StconInstance& forest) {
  check_forest(forest);
  const Digraph& src = forest.graph;
  const std::size_t n = src.node_count();
  NamePool names;
  for (NodeId v = 0; v < n; ++v) {
    if (v != forest.s) names.reserve(src.name(v));
  }
  auto rename = names_of(src);
  rename[forest.s] = names.fresh("in");

  DependencyGraph out;
  const auto map = copy_into(out.graph, src, rename);
  const NodeId t = map[forest.t];
  out.graph.remove_out_edges(t);
  out.in_set = {map[forest.s]};
  out.yes_node = out.graph.add_node(names.fresh("yes"));
  out.no_node = out.graph.add_node(names.fresh("no"));
  add_chain(out.graph, names, t, out.yes_node, n + 1, "p");
  for (NodeId v = 0; v < out.graph.node_count(); ++v) {
    if (v != out.yes_node && v != out.no_node && out.graph.out_degree(v) == 0) {
      out.graph.add_edge(v, out.no_node);
    }
  }
  return out;
}

namespace {

std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool coin(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

StconInstance blank(Rng& rng, std::size_t nodes) {
  StconInstance inst;
  for (std::size_t i = 0; i < nodes; ++i) inst.graph.add_node("v" + std::to_string(i));
  inst.s = below(rng, nodes);
  inst.t = below(rng, nodes);
  return inst;
}

std::vector<NodeId> shuffled(Rng& rng, std::size_t n) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[below(rng, i)]);
  return order;
}

}  // namespace

StconInstance random_digraph(Rng& rng, std::size_t nodes, double density) {
  StconInstance inst = blank(rng, std::max<std::size_t>(nodes, 1));
  for (NodeId u = 0; u < inst.graph.node_count(); ++u) {
    for (NodeId v = 0; v < inst.graph.node_count(); ++v) {
      if (u != v && coin(rng, density)) inst.graph.add_edge(u, v);
    }
  }
  return inst;
}

StconInstance random_dag(Rng& rng, std::size_t nodes, double density) {
  StconInstance inst = blank(rng, std::max<std::size_t>(nodes, 1));
  const auto order = shuffled(rng, inst.graph.node_count());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (coin(rng, density)) inst.graph.add_edge(order[i], order[j]);
    }
  }
  return inst;
}

StconInstance random_forest(Rng& rng, std::size_t max_nodes) {
  const std::size_t n = 1 + below(rng, std::max<std::size_t>(max_nodes, 1));
  StconInstance inst = blank(rng, n);
  const auto order = shuffled(rng, n);
  // Each node points to a strictly later node in `order`, or nowhere.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t pick = below(rng, n - i);  // 0 means no successor
    if (pick > 0) inst.graph.add_edge(order[i], order[i + pick]);
  }
  return inst;
}

}  // namespace memdep
