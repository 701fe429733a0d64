#include "oracles.hpp"

#include <functional>
#include <string>

namespace memdep::oracle {

std::map<NodeId, std::size_t> path_enum_distances(const Digraph& g,
                                                  const std::set<NodeId>& sources) {
  std::map<NodeId, std::size_t> best;
  std::vector<bool> on_path(g.node_count(), false);
  std::function<void(NodeId, std::size_t)> walk = [&](NodeId v, std::size_t len) {
    auto it = best.find(v);
    if (it == best.end() || len < it->second) best[v] = len;
    on_path[v] = true;
    for (NodeId w = 0; w < g.node_count(); ++w) {
      if (!on_path[w] && g.has_edge(v, w)) walk(w, len + 1);
    }
    on_path[v] = false;
  };
  for (NodeId s : sources) walk(s, 0);
  return best;
}

std::vector<std::vector<bool>> closure(const Digraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (NodeId i = 0; i < n; ++i) {
    r[i][i] = true;
    for (NodeId j = 0; j < n; ++j) {
      if (g.has_edge(i, j)) r[i][j] = true;
    }
  }
  for (NodeId k = 0; k < n; ++k) {
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

bool has_cycle(const Digraph& g) {
  const auto r = closure(g);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (g.has_edge(u, v) && r[v][u]) return true;
    }
  }
  return false;
}

Verdict general(const DependencyGraph& g) {
  const auto d = path_enum_distances(g.graph, g.in_set);
  const bool y = d.contains(g.yes_node);
  const bool n = d.contains(g.no_node);
  if (!y && !n) return Verdict::violation(ViolationCode::NoOutput);
  if (y && n) {
    if (d.at(g.yes_node) == d.at(g.no_node)) return Verdict::violation(ViolationCode::SameTimestep);
    return d.at(g.yes_node) < d.at(g.no_node) ? Verdict::accept() : Verdict::reject();
  }
  return y ? Verdict::accept() : Verdict::reject();
}

Verdict standard(const DependencyGraph& g) {
  const auto r = closure(g.graph);
  auto reached = [&](NodeId v) {
    for (NodeId s : g.in_set) {
      if (r[s][v]) return true;
    }
    return false;
  };
  for (NodeId u = 0; u < g.graph.node_count(); ++u) {
    for (NodeId v = 0; v < g.graph.node_count(); ++v) {
      if (reached(u) && g.graph.has_edge(u, v) && r[v][u]) {
        return Verdict::violation(ViolationCode::NotHalting);
      }
    }
  }
  const bool y = reached(g.yes_node);
  const bool n = reached(g.no_node);
  if (y && n) return Verdict::violation(ViolationCode::BothReachable);
  if (!y && !n) return Verdict::violation(ViolationCode::NoOutput);
  return y ? Verdict::accept() : Verdict::reject();
}

std::set<NodeId> can_reach(const Digraph& g, NodeId target) {
  const auto r = closure(g);
  std::set<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (r[v][target]) out.insert(v);
  }
  return out;
}

Digraph digraph_from_mask(std::size_t n, unsigned long mask) {
  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1UL << (i * n + j))) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<Digraph> all_dags(std::size_t n, const std::string& prefix) {
  std::vector<Digraph> out;
  const unsigned long total = 1UL << (n * n);
  for (unsigned long mask = 0; mask < total; ++mask) {
    Digraph g = digraph_from_mask(n, mask);
    if (has_cycle(g)) continue;
    Digraph renamed;
    for (NodeId v = 0; v < n; ++v) renamed.add_node(prefix + std::to_string(v));
    for (auto [u, v] : g.edges()) renamed.add_edge(u, v);
    out.push_back(std::move(renamed));
  }
  return out;
}

}  // namespace memdep::oracle
