#include "memdep/reach.hpp"

#include <algorithm>
#include <deque>

namespace memdep {

std::map<NodeId, std::size_t> bfs_distances(const Digraph& g, const std::set<NodeId>& sources) {
  std::map<NodeId, std::size_t> dist;
  std::deque<NodeId> queue;
  for (NodeId s : sources) {
    if (dist.emplace(s, 0).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    const std::size_t du = dist.at(u);
    for (NodeId v : g.successors(u)) {
      if (dist.emplace(v, du + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

std::set<NodeId> reachable_from(const Digraph& g, const std::set<NodeId>& sources) {
  std::set<NodeId> out;
  for (const auto& [v, _] : bfs_distances(g, sources)) out.insert(v);
  return out;
}

std::optional<std::vector<NodeId>> find_cycle(const Digraph& g, const std::set<NodeId>* within) {
  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(g.node_count(), White);
  std::vector<NodeId> stack;
  auto inside = [&](NodeId v) { return within == nullptr || within->contains(v); };

  for (NodeId root : g.ids_by_name()) {
    if (color[root] != White || !inside(root)) continue;
    // Iterative DFS: (node, next successor position).
    std::vector<std::pair<NodeId, std::size_t>> frames{{root, 0}};
    color[root] = Grey;
    stack.assign(1, root);
    while (!frames.empty()) {
      auto& [u, pos] = frames.back();
      const auto& succ = g.successors(u);
      if (pos == succ.size()) {
        color[u] = Black;
        frames.pop_back();
        stack.pop_back();
        continue;
      }
      const NodeId v = succ[pos++];
      if (!inside(v)) continue;
      if (color[v] == Grey) {
        auto start = std::find(stack.begin(), stack.end(), v);
        return std::vector<NodeId>(start, stack.end());
      }
      if (color[v] == White) {
        color[v] = Grey;
        frames.emplace_back(v, 0);
        stack.push_back(v);
      }
    }
  }
  return std::nullopt;
}

bool solve_stcon(const Digraph& g, NodeId s, NodeId t) {
  return bfs_distances(g, {s}).contains(t);
}

bool solve_stcon(const StconInstance& inst) { return solve_stcon(inst.graph, inst.s, inst.t); }

Verdict solve_general(const DependencyGraph& g) {
  const auto dist = bfs_distances(g.graph, g.in_set);
  auto get = [&](NodeId v) -> std::optional<std::size_t> {
    if (auto it = dist.find(v); it != dist.end()) return it->second;
    return std::nullopt;
  };
  const auto dy = get(g.yes_node);
  const auto dn = get(g.no_node);
  if (!dy && !dn) return Verdict::violation(ViolationCode::NoOutput);
  if (dy && dn && *dy == *dn) return Verdict::violation(ViolationCode::SameTimestep);
  if (!dn || (dy && *dy < *dn)) return Verdict::accept();
  return Verdict::reject();
}

Verdict solve_standard(const DependencyGraph& g) {
  const auto reach = reachable_from(g.graph, g.in_set);
  if (find_cycle(g.graph, &reach)) return Verdict::violation(ViolationCode::NotHalting);
  const bool yes = reach.contains(g.yes_node);
  const bool no = reach.contains(g.no_node);
  if (yes && no) return Verdict::violation(ViolationCode::BothReachable);
  if (!yes && !no) return Verdict::violation(ViolationCode::NoOutput);
  return yes ? Verdict::accept() : Verdict::reject();
}

Verdict solve_restricted(const DependencyGraph& g) {
  if (!classify(g).restricted_ok) return Verdict::violation(ViolationCode::NotRestricted);
  if (g.in_set.empty()) return Verdict::violation(ViolationCode::NoOutput);
  const auto& d = g.graph;
  std::vector<NodeId> starts(g.in_set.begin(), g.in_set.end());
  std::sort(starts.begin(), starts.end(),
            [&](NodeId a, NodeId b) { return d.name(a) < d.name(b); });
  std::optional<Verdict> verdict;
  for (NodeId x : starts) {
    // Acyclic by restricted_ok, so at most node_count moves.
    for (std::size_t moves = 0; x != g.yes_node && x != g.no_node; ++moves) {
      const auto& succ = d.successors(x);
      if (succ.empty() || moves > d.node_count()) {
        return Verdict::violation(ViolationCode::NotRestricted);
      }
      x = *std::min_element(succ.begin(), succ.end(),
                            [&](NodeId a, NodeId b) { return d.name(a) < d.name(b); });
    }
    const Verdict here = x == g.yes_node ? Verdict::accept() : Verdict::reject();
    if (verdict && *verdict != here) return Verdict::violation(ViolationCode::InconsistentInSet);
    verdict = here;
  }
  return *verdict;
}

Verdict solve(const DependencyGraph& g, Condition condition) {
  switch (condition) {
    case Condition::General: return solve_general(g);
    case Condition::Standard: return solve_standard(g);
    case Condition::Restricted: return solve_restricted(g);
  }
  return Verdict::violation(ViolationCode::None);
}

namespace {

std::set<NodeId> backward_reachable(const Digraph& g, NodeId target) {
  const auto pred = g.predecessors();
  std::set<NodeId> seen{target};
  std::vector<NodeId> todo{target};
  while (!todo.empty()) {
    const NodeId v = todo.back();
    todo.pop_back();
    for (NodeId u : pred[v]) {
      if (seen.insert(u).second) todo.push_back(u);
    }
  }
  return seen;
}

std::string cycle_text(const Digraph& g, const std::vector<NodeId>& cycle) {
  std::string out;
  for (NodeId v : cycle) out += g.name(v) + " -> ";
  return out + g.name(cycle.front());
}

}  // namespace

ObjectClasses compute_object_classes(const DependencyGraph& g) {
  ObjectClasses c;
  c.o_yes = backward_reachable(g.graph, g.yes_node);
  c.o_no = backward_reachable(g.graph, g.no_node);
  for (NodeId v = 0; v < g.graph.node_count(); ++v) {
    if (!c.o_yes.contains(v) && !c.o_no.contains(v)) c.o_other.insert(v);
  }
  return c;
}

ConditionClass classify(const DependencyGraph& g) {
  const auto& d = g.graph;
  ConditionClass out;
  auto note = [&](const std::string& what) { out.diagnostics.push_back(what); };

  const auto cycle = find_cycle(d);
  out.acyclic = !cycle;
  if (cycle) note("cycle: " + cycle_text(d, *cycle));
  const auto reach = reachable_from(d, g.in_set);
  const auto reach_cycle = find_cycle(d, &reach);
  out.reachable_acyclic = !reach_cycle;
  if (reach_cycle) note("reachable cycle: " + cycle_text(d, *reach_cycle));

  const auto classes = compute_object_classes(g);
  bool disjoint = true;
  for (NodeId v : d.ids_by_name()) {
    if (classes.o_yes.contains(v) && classes.o_no.contains(v)) {
      disjoint = false;
      note("leads to both yes and no: " + d.name(v));
      break;
    }
  }
  out.standard_ok = out.acyclic && disjoint;

  std::vector<bool> active(d.node_count(), false);
  for (auto [u, v] : d.edges()) active[u] = active[v] = true;
  for (NodeId v : g.in_set) active[v] = true;
  active[g.yes_node] = active[g.no_node] = true;

  bool other_free = true;
  bool lambda_free = true;
  for (NodeId v : d.ids_by_name()) {
    if (!active[v]) continue;
    if (other_free && classes.o_other.contains(v)) {
      other_free = false;
      note("leads to neither yes nor no: " + d.name(v));
    }
    if (lambda_free && d.out_degree(v) == 0 && v != g.yes_node && v != g.no_node) {
      lambda_free = false;
      note("sink other than yes/no: " + d.name(v));
    }
  }
  out.lambda_free = lambda_free;

  // With disjoint classes and no o_other node, no edge can join the two
  // sides, so the yes and no parts are weakly disconnected.
  out.restricted_ok = out.standard_ok && other_free;
  return out;
}

}  // namespace memdep
