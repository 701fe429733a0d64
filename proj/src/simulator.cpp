#include "memdep/simulator.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "memdep/error.hpp"
#include "memdep/textio.hpp"

namespace memdep {

namespace {

using Count = Multiset::Count;

/// Rules grouped for lookup during scheduling.
struct RuleIndex {
  // (label, object) -> evolution rules, ascending index
  std::map<std::pair<LabelId, ObjectId>, std::vector<const Rule*>> evolve;
  // label -> membrane rules (kinds b, c, e, f), ascending index
  std::map<LabelId, std::vector<const Rule*>> membrane;

  explicit RuleIndex(const MembraneSystem& sys) {
    for (const auto& r : sys.rules) {
      if (r.kind == RuleKind::Dissolve) {
        throw Error(ErrorCode::UnsupportedRule,
                    "dissolution rule " + format_rule(r) + " cannot be simulated");
      }
      if (r.kind == RuleKind::Evolve) {
        evolve[{r.label, r.lhs}].push_back(&r);
      } else if (r.label != env_label()) {
        membrane[r.label].push_back(&r);
      }
    }
  }

  const std::vector<const Rule*>* evolutions(const LabelId& h, const ObjectId& o) const {
    auto it = evolve.find({h, o});
    return it == evolve.end() ? nullptr : &it->second;
  }
  const std::vector<const Rule*>& membrane_rules(const LabelId& h) const {
    static const std::vector<const Rule*> none;
    auto it = membrane.find(h);
    return it == membrane.end() ? none : it->second;
  }
};

/// Configuration tree in depth-first preorder.
struct Flat {
  std::vector<const MembraneInstance*> node;
  std::vector<std::ptrdiff_t> parent;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::vector<std::size_t>> path;

  explicit Flat(const MembraneInstance& root) { visit(root, -1, {}); }

 private:
  void visit(const MembraneInstance& m, std::ptrdiff_t p, std::vector<std::size_t> where) {
    const std::size_t id = node.size();
    node.push_back(&m);
    parent.push_back(p);
    children.emplace_back();
    path.push_back(where);
    if (p >= 0) children[static_cast<std::size_t>(p)].push_back(id);
    for (std::size_t i = 0; i < m.children.size(); ++i) {
      where.push_back(i);
      visit(m.children[i], static_cast<std::ptrdiff_t>(id), where);
      where.pop_back();
    }
  }
};

/// Lowest depth-first distinct children labelled h1, h2, h3.
std::optional<std::array<std::size_t, 3>> pick_children(const Flat& flat, std::size_t i,
                                                        const Rule& r) {
  std::array<std::size_t, 3> out{};
  std::vector<std::size_t> used;
  for (std::size_t k = 0; k < 3; ++k) {
    bool found = false;
    for (std::size_t c : flat.children[i]) {
      if (flat.node[c]->label == r.child_labels[k] &&
          std::find(used.begin(), used.end(), c) == used.end()) {
        out[k] = c;
        used.push_back(c);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

struct MembraneAction {
  const Rule* rule = nullptr;
  std::array<std::size_t, 3> kids{};
};

/// The membrane rules node i could be the subject of, ignoring object
/// contention; `contents` supplies the currently available objects.
std::vector<MembraneAction> membrane_candidates(const Flat& flat, const RuleIndex& index,
                                                std::size_t i,
                                                const std::vector<Multiset>& contents) {
  std::vector<MembraneAction> out;
  if (flat.parent[i] < 0) return out;
  const auto parent = static_cast<std::size_t>(flat.parent[i]);
  for (const Rule* r : index.membrane_rules(flat.node[i]->label)) {
    switch (r->kind) {
      case RuleKind::SendIn:
        if (contents[parent].contains(r->lhs)) out.push_back({r, {}});
        break;
      case RuleKind::SendOut:
      case RuleKind::DivideElem:
        if (contents[i].contains(r->lhs)) out.push_back({r, {}});
        break;
      case RuleKind::DivideNonElem:
        if (contents[i].contains(r->lhs)) {
          if (auto kids = pick_children(flat, i, *r)) out.push_back({r, *kids});
        }
        break;
      default:
        break;
    }
  }
  return out;
}

/// Node whose objects a membrane action on node i consumes.
std::size_t source_of(const Flat& flat, std::size_t i, const Rule& r) {
  return r.kind == RuleKind::SendIn ? static_cast<std::size_t>(flat.parent[i]) : i;
}

struct Plan {
  std::vector<std::optional<MembraneAction>> action;
  std::vector<Multiset> consumed;
  std::vector<std::vector<std::pair<const Rule*, Count>>> evolutions;

  explicit Plan(std::size_t n) : action(n), consumed(n), evolutions(n) {}
};

struct Built {
  std::vector<MembraneInstance> copies;
  Multiset sent_out;
};

class Applier {
 public:
  Applier(const Flat& flat, const Plan& plan, const Limits& limits)
      : flat_(flat), plan_(plan), limits_(limits) {}

  Transition apply(std::size_t step) {
    Built root = build(0);
    Transition t;
    t.next.root = std::move(root.copies.front());
    t.next.step = step + 1;
    t.emitted = std::move(emitted_);
    if (t.next.membrane_count() > limits_.membrane_cap) {
      throw Error(ErrorCode::PopulationCap,
                  "membrane count exceeds " + std::to_string(limits_.membrane_cap));
    }
    return t;
  }

 private:
  void check(const MembraneInstance& m) {
    if (m.contents.total() > limits_.population_cap) {
      throw Error(ErrorCode::PopulationCap, "membrane " + m.label.str() + " holds more than " +
                                                std::to_string(limits_.population_cap) +
                                                " objects");
    }
  }

  Built build(std::size_t i) {
    const MembraneInstance& old = *flat_.node[i];
    Multiset base;
    for (const auto& [o, n] : old.contents) {
      const Count left = n - plan_.consumed[i].count(o);
      if (left > 0) base.add(o, left);
    }
    Multiset produced;
    for (const auto& [r, n] : plan_.evolutions[i]) produced += r->rhs.scaled(n);
    base += produced;
    if (i == 0) emitted_ += produced;

    const auto& act = plan_.action[i];
    if (act && act->rule->kind == RuleKind::SendIn) base.add(act->rule->first);

    const auto& kids = flat_.children[i];
    std::vector<Built> built;
    built.reserve(kids.size());
    for (std::size_t c : kids) built.push_back(build(c));

    auto assemble = [&](Multiset contents, const std::function<bool(std::size_t)>& keep) {
      MembraneInstance m{old.label, std::move(contents), {}};
      for (std::size_t k = 0; k < kids.size(); ++k) {
        if (!keep(kids[k])) continue;
        m.contents += built[k].sent_out;
        for (const auto& copy : built[k].copies) m.children.push_back(copy);
      }
      if (i == 0) {
        for (std::size_t k = 0; k < kids.size(); ++k) emitted_ += built[k].sent_out;
      }
      check(m);
      return m;
    };
    auto all = [](std::size_t) { return true; };

    Built out;
    if (!act || act->rule->kind == RuleKind::SendIn) {
      out.copies.push_back(assemble(std::move(base), all));
    } else if (act->rule->kind == RuleKind::SendOut) {
      out.sent_out.add(act->rule->first);
      out.copies.push_back(assemble(std::move(base), all));
    } else if (act->rule->kind == RuleKind::DivideElem) {
      Multiset first = base;
      first.add(act->rule->first);
      base.add(act->rule->second);
      out.copies.push_back(assemble(std::move(first), all));
      out.copies.push_back(assemble(std::move(base), all));
    } else {
      const std::size_t k1 = act->kids[0];
      const std::size_t k2 = act->kids[1];
      Multiset first = base;
      first.add(act->rule->first);
      base.add(act->rule->second);
      out.copies.push_back(assemble(std::move(first), [&](std::size_t c) { return c != k2; }));
      out.copies.push_back(assemble(std::move(base), [&](std::size_t c) { return c != k1; }));
    }
    return out;
  }

  const Flat& flat_;
  const Plan& plan_;
  const Limits& limits_;
  Multiset emitted_;
};

std::vector<Multiset> contents_of(const Flat& flat) {
  std::vector<Multiset> out;
  out.reserve(flat.node.size());
  for (const auto* m : flat.node) out.push_back(m->contents);
  return out;
}

Plan lex_plan(const Flat& flat, const RuleIndex& index) {
  const std::size_t n = flat.node.size();
  Plan plan(n);
  std::vector<bool> busy(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const MembraneInstance& m = *flat.node[i];
    for (const auto& [o, count] : m.contents) {
      Count left = count;
      const auto* evolutions = index.evolutions(m.label, o);
      while (left > 0) {
        // Lowest-index applicable rule for this occurrence.
        const Rule* best = evolutions ? evolutions->front() : nullptr;
        std::size_t subject = 0;
        std::array<std::size_t, 3> kids{};
        auto consider = [&](const Rule* r, std::size_t who, std::array<std::size_t, 3> k) {
          if (best == nullptr || r->index < best->index) {
            best = r;
            subject = who;
            kids = k;
          }
        };
        if (i > 0 && !busy[i]) {
          for (const Rule* r : index.membrane_rules(m.label)) {
            if (r->lhs != o || r->kind == RuleKind::SendIn) continue;
            if (r->kind == RuleKind::DivideNonElem) {
              if (auto k = pick_children(flat, i, *r)) consider(r, i, *k);
            } else {
              consider(r, i, {});
            }
          }
        }
        for (std::size_t c : flat.children[i]) {
          if (busy[c]) continue;
          for (const Rule* r : index.membrane_rules(flat.node[c]->label)) {
            if (r->kind == RuleKind::SendIn && r->lhs == o) consider(r, c, {});
          }
        }
        if (best == nullptr) break;
        if (best->kind == RuleKind::Evolve) {
          plan.evolutions[i].emplace_back(best, left);
          plan.consumed[i].add(o, left);
          left = 0;
        } else {
          plan.action[subject] = MembraneAction{best, kids};
          busy[subject] = true;
          plan.consumed[i].add(o);
          --left;
        }
      }
    }
  }
  return plan;
}

/// Visits every complete plan: membrane actions first (with maximality
/// pruning), then every distribution of the remaining occurrences over the
/// evolution rules.
class Enumerator {
 public:
  Enumerator(const Flat& flat, const RuleIndex& index, std::function<void(const Plan&)> visit)
      : flat_(flat), index_(index), visit_(std::move(visit)), plan_(flat.node.size()) {
    remaining_ = contents_of(flat);
    for (std::size_t i = 0; i < flat.node.size(); ++i) {
      candidates_.push_back(membrane_candidates(flat, index, i, remaining_));
    }
  }

  void run() { choose_membrane(0); }

 private:
  void choose_membrane(std::size_t i) {
    if (i == flat_.node.size()) {
      if (maximal()) distribute();
      return;
    }
    plan_.action[i].reset();
    choose_membrane(i + 1);
    for (const auto& cand : candidates_[i]) {
      const std::size_t src = source_of(flat_, i, *cand.rule);
      if (!remaining_[src].contains(cand.rule->lhs)) continue;
      remaining_[src].remove(cand.rule->lhs);
      plan_.action[i] = cand;
      choose_membrane(i + 1);
      plan_.action[i].reset();
      remaining_[src].add(cand.rule->lhs);
    }
  }

  bool maximal() const {
    for (std::size_t j = 0; j < flat_.node.size(); ++j) {
      const LabelId& h = flat_.node[j]->label;
      for (const auto& [o, left] : remaining_[j]) {
        if (index_.evolutions(h, o)) continue;
        if (!plan_.action[j]) {
          for (const auto& cand : candidates_[j]) {
            if (cand.rule->kind != RuleKind::SendIn && cand.rule->lhs == o) return false;
          }
        }
        for (std::size_t c : flat_.children[j]) {
          if (plan_.action[c]) continue;
          for (const auto& cand : candidates_[c]) {
            if (cand.rule->kind == RuleKind::SendIn && cand.rule->lhs == o) return false;
          }
        }
      }
    }
    return true;
  }

  struct Pool {
    std::size_t node;
    ObjectId object;
    Count count;
    const std::vector<const Rule*>* rules;
  };

  void distribute() {
    pools_.clear();
    Plan base = plan_;
    for (std::size_t j = 0; j < flat_.node.size(); ++j) {
      base.consumed[j] = Multiset{};
      base.evolutions[j].clear();
      const LabelId& h = flat_.node[j]->label;
      for (const auto& [o, n] : flat_.node[j]->contents) {
        const Count used = n - remaining_[j].count(o);
        if (used > 0) base.consumed[j].add(o, used);
      }
      for (const auto& [o, left] : remaining_[j]) {
        if (const auto* rules = index_.evolutions(h, o)) {
          base.consumed[j].add(o, left);
          pools_.push_back({j, o, left, rules});
        }
      }
    }
    work_ = std::move(base);
    split(0);
  }

  void split(std::size_t p) {
    if (p == pools_.size()) {
      visit_(work_);
      return;
    }
    compose(p, 0, pools_[p].count, work_.evolutions[pools_[p].node]);
  }

  // Assigns `left` occurrences of pool p across rules k.. in every way.
  void compose(std::size_t p, std::size_t k, Count left,
               std::vector<std::pair<const Rule*, Count>>& ev) {
    const Pool& pool = pools_[p];
    const auto& rules = *pool.rules;
    if (k + 1 == rules.size()) {
      ev.emplace_back(rules[k], left);
      split(p + 1);
      ev.pop_back();
      return;
    }
    for (Count take = left + 1; take-- > 0;) {
      if (take > 0) ev.emplace_back(rules[k], take);
      compose(p, k + 1, left - take, ev);
      if (take > 0) ev.pop_back();
    }
  }

  const Flat& flat_;
  const RuleIndex& index_;
  std::function<void(const Plan&)> visit_;
  Plan plan_;
  Plan work_{0};
  std::vector<Multiset> remaining_;
  std::vector<std::vector<MembraneAction>> candidates_;
  std::vector<Pool> pools_;
};

void key_into(const MembraneInstance& m, std::string& out) {
  out += m.label.str();
  out += '{';
  out += format_multiset_compact(m.contents);
  out += '}';
  if (m.children.empty()) return;
  std::vector<std::string> kids;
  kids.reserve(m.children.size());
  for (const auto& c : m.children) {
    std::string k;
    key_into(c, k);
    kids.push_back(std::move(k));
  }
  std::sort(kids.begin(), kids.end());
  out += '[';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i > 0) out += ',';
    out += kids[i];
  }
  out += ']';
}

void dump_into(const MembraneInstance& m, std::string& out) {
  out += '[' + m.label.str() + '{' + format_multiset_compact(m.contents) + '}';
  for (const auto& c : m.children) {
    out += ' ';
    dump_into(c, out);
  }
  out += ']';
}

std::size_t count_instances(const MembraneInstance& m) {
  std::size_t n = 1;
  for (const auto& c : m.children) n += count_instances(c);
  return n;
}

bool only_signals(const MembraneInstance& m, const ObjectId& yes, const ObjectId& no) {
  for (const auto& [o, _] : m.contents) {
    if (o != yes && o != no) return false;
  }
  return std::all_of(m.children.begin(), m.children.end(),
                     [&](const MembraneInstance& c) { return only_signals(c, yes, no); });
}

MembraneInstance instantiate(const MembraneNode& node, const MembraneSystem& sys,
                             const Multiset& input) {
  MembraneInstance m{node.label, {}, {}};
  if (auto it = sys.initial_contents.find(node.label); it != sys.initial_contents.end()) {
    m.contents = it->second;
  }
  if (sys.input_label && *sys.input_label == node.label) m.contents += input;
  for (const auto& c : node.children) m.children.push_back(instantiate(c, sys, input));
  return m;
}

}  // namespace

std::size_t Configuration::membrane_count() const { return count_instances(root); }

std::string canonical_key(const MembraneInstance& root) {
  std::string out;
  key_into(root, out);
  return out;
}

std::string format_configuration(const Configuration& cfg) {
  std::string out;
  dump_into(cfg.root, out);
  return out;
}

std::string_view to_string(HaltReason reason) {
  switch (reason) {
    case HaltReason::Halted: return "HALTED";
    case HaltReason::StepLimit: return "STEP_LIMIT";
    case HaltReason::PopulationCap: return "POPULATION_CAP";
  }
  return "UNKNOWN";
}

std::vector<Application> applicable_rules(const Configuration& cfg, const MembraneSystem& sys) {
  const RuleIndex index(sys);
  const Flat flat(cfg.root);
  const auto contents = contents_of(flat);
  std::vector<Application> out;
  for (std::size_t i = 0; i < flat.node.size(); ++i) {
    const MembraneInstance& m = *flat.node[i];
    for (const auto& [o, _] : m.contents) {
      if (const auto* rules = index.evolutions(m.label, o)) {
        for (const Rule* r : *rules) out.push_back({flat.path[i], r->index});
      }
    }
    for (const auto& cand : membrane_candidates(flat, index, i, contents)) {
      out.push_back({flat.path[i], cand.rule->index});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Configuration initial_configuration(const MembraneSystem& sys, const Multiset& input) {
  Configuration cfg;
  cfg.root = instantiate(sys.structure, sys, input);
  return cfg;
}

Transition step(const Configuration& cfg, const MembraneSystem& sys, Scheduler scheduler,
                const Limits& limits) {
  if (scheduler == Scheduler::Exhaustive) {
    auto all = successors(cfg, sys, limits);
    if (all.empty()) return {cfg, {}};
    return std::move(all.front());
  }
  const RuleIndex index(sys);
  const Flat flat(cfg.root);
  Plan plan = lex_plan(flat, index);
  const bool idle = std::all_of(plan.consumed.begin(), plan.consumed.end(),
                                [](const Multiset& m) { return m.empty(); });
  if (idle) return {cfg, {}};
  return Applier(flat, plan, limits).apply(cfg.step);
}

std::vector<Transition> successors(const Configuration& cfg, const MembraneSystem& sys,
                                   const Limits& limits, std::size_t max_successors) {
  const RuleIndex index(sys);
  const Flat flat(cfg.root);
  std::map<std::string, Transition> found;
  std::size_t plans = 0;
  Enumerator(flat, index, [&](const Plan& plan) {
    const bool idle = std::all_of(plan.consumed.begin(), plan.consumed.end(),
                                  [](const Multiset& m) { return m.empty(); });
    if (idle) return;
    if (++plans > max_successors) {
      throw Error(ErrorCode::LimitExceeded,
                  "more than " + std::to_string(max_successors) + " schedules in one step");
    }
    Transition t = Applier(flat, plan, limits).apply(cfg.step);
    std::string key = canonical_key(t.next.root) + "|" + format_multiset_compact(t.emitted);
    found.try_emplace(std::move(key), std::move(t));
  }).run();
  std::vector<Transition> out;
  out.reserve(found.size());
  for (auto& [_, t] : found) out.push_back(std::move(t));
  return out;
}

std::optional<std::size_t> ComputationTrace::first_emission(const ObjectId& object) const {
  for (std::size_t k = 0; k < emissions.size(); ++k) {
    if (emissions[k].contains(object)) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> ComputationTrace::emission_steps(const ObjectId& object) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < emissions.size(); ++k) {
    if (emissions[k].contains(object)) out.push_back(k);
  }
  return out;
}

ComputationTrace run(const MembraneSystem& sys, const Multiset& input, Scheduler scheduler,
                     const Limits& limits) {
  [[maybe_unused]] const RuleIndex check(sys);  // rejects dissolution up front
  ComputationTrace trace;
  trace.yes = sys.yes;
  trace.no = sys.no;
  trace.configurations.push_back(initial_configuration(sys, input));
  trace.emissions.push_back(trace.configurations.back().environment());
  while (true) {
    const Configuration& cur = trace.configurations.back();
    if (applicable_rules(cur, sys).empty()) {
      trace.halted = true;
      trace.halt_reason = HaltReason::Halted;
      return trace;
    }
    if (cur.step >= limits.step_limit) {
      trace.halt_reason = HaltReason::StepLimit;
      return trace;
    }
    try {
      Transition t = step(cur, sys, scheduler, limits);
      trace.configurations.push_back(std::move(t.next));
      trace.emissions.push_back(std::move(t.emitted));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PopulationCap) throw;
      trace.halt_reason = HaltReason::PopulationCap;
      return trace;
    }
  }
}

EmissionSummary summarize(const ComputationTrace& trace) {
  EmissionSummary s;
  s.first_yes = trace.first_emission(trace.yes);
  s.first_no = trace.first_emission(trace.no);
  s.halted = trace.halted;
  s.halt_reason = trace.halt_reason;
  s.final_step = trace.final_step();
  if (!trace.configurations.empty()) {
    s.only_signals_left = only_signals(trace.configurations.back().root, trace.yes, trace.no);
  }
  return s;
}

Verdict judge(const EmissionSummary& s, Condition condition) {
  if (condition == Condition::General) {
    if (s.first_yes && s.first_no) {
      if (*s.first_yes == *s.first_no) return Verdict::violation(ViolationCode::SameTimestep);
      return *s.first_yes < *s.first_no ? Verdict::accept() : Verdict::reject();
    }
    if (s.first_yes) return Verdict::accept();
    if (s.first_no) return Verdict::reject();
    if (s.halted) return Verdict::violation(ViolationCode::NoOutput);
    return Verdict::violation(s.halt_reason == HaltReason::PopulationCap
                                  ? ViolationCode::PopulationCap
                                  : ViolationCode::StepLimit);
  }
  if (!s.halted) {
    throw Error(ErrorCode::NotHalted, "the computation did not halt (" +
                                          std::string(to_string(s.halt_reason)) + ")");
  }
  if (s.first_yes && s.first_no) return Verdict::violation(ViolationCode::BothReachable);
  if (!s.first_yes && !s.first_no) return Verdict::violation(ViolationCode::NoOutput);
  const std::size_t first = s.first_yes ? *s.first_yes : *s.first_no;
  if (first != s.final_step) return Verdict::violation(ViolationCode::NotLastStep);
  if (condition == Condition::Restricted && !s.only_signals_left) {
    return Verdict::violation(ViolationCode::NotRestricted);
  }
  return s.first_yes ? Verdict::accept() : Verdict::reject();
}

Verdict judge(const ComputationTrace& trace, Condition condition) {
  return judge(summarize(trace), condition);
}

std::vector<std::string> repeated_signals(const ComputationTrace& trace) {
  std::vector<std::string> out;
  for (const ObjectId* signal : {&trace.yes, &trace.no}) {
    const auto steps = trace.emission_steps(*signal);
    for (std::size_t i = 1; i < steps.size(); ++i) {
      out.push_back(signal->str() + " released again at step " + std::to_string(steps[i]) +
                    " (first at step " + std::to_string(steps.front()) + ")");
    }
  }
  return out;
}

ExploreResult explore_all(const MembraneSystem& sys, const Multiset& input,
                          const ExploreLimits& explore, const Limits& limits) {
  struct State {
    Configuration cfg;
    std::optional<std::size_t> first_yes;
    std::optional<std::size_t> first_no;
  };
  constexpr Condition kConditions[] = {Condition::General, Condition::Standard,
                                       Condition::Restricted};

  ExploreResult result;
  for (Condition c : kConditions) result.verdicts[c];

  auto record = [&](const State& st, bool halted, HaltReason reason) {
    EmissionSummary s;
    s.first_yes = st.first_yes;
    s.first_no = st.first_no;
    s.halted = halted;
    s.halt_reason = reason;
    s.final_step = st.cfg.step;
    s.only_signals_left = only_signals(st.cfg.root, sys.yes, sys.no);
    for (Condition c : kConditions) {
      if (c != Condition::General && !halted) {
        result.verdicts[c].insert(Verdict::violation(reason == HaltReason::PopulationCap
                                                         ? ViolationCode::PopulationCap
                                                         : ViolationCode::StepLimit));
      } else {
        result.verdicts[c].insert(judge(s, c));
      }
    }
  };

  auto state_key = [](const State& st) {
    auto opt = [](const std::optional<std::size_t>& v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    return canonical_key(st.cfg.root) + "|" + opt(st.first_yes) + "|" + opt(st.first_no);
  };

  State start{initial_configuration(sys, input), std::nullopt, std::nullopt};
  if (start.cfg.environment().contains(sys.yes)) start.first_yes = 0;
  if (start.cfg.environment().contains(sys.no)) start.first_no = 0;

  std::map<std::string, State> layer;
  layer.emplace(state_key(start), std::move(start));
  result.configs_visited = 1;

  while (!layer.empty()) {
    std::map<std::string, State> next;
    for (auto& [_, st] : layer) {
      if (st.cfg.step >= explore.max_steps) {
        if (applicable_rules(st.cfg, sys).empty()) {
          record(st, true, HaltReason::Halted);
        } else {
          record(st, false, HaltReason::StepLimit);
        }
        continue;
      }
      std::vector<Transition> succ;
      try {
        succ = successors(st.cfg, sys, limits, explore.max_configs);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PopulationCap) throw;
        record(st, false, HaltReason::PopulationCap);
        continue;
      }
      if (succ.empty()) {
        record(st, true, HaltReason::Halted);
        continue;
      }
      for (auto& t : succ) {
        State ns{std::move(t.next), st.first_yes, st.first_no};
        if (!ns.first_yes && t.emitted.contains(sys.yes)) ns.first_yes = ns.cfg.step;
        if (!ns.first_no && t.emitted.contains(sys.no)) ns.first_no = ns.cfg.step;
        std::string key = state_key(ns);
        if (next.try_emplace(std::move(key), std::move(ns)).second &&
            ++result.configs_visited > explore.max_configs) {
          throw Error(ErrorCode::LimitExceeded, "exploration visited more than " +
                                                    std::to_string(explore.max_configs) +
                                                    " configurations");
        }
      }
    }
    layer = std::move(next);
  }
  return result;
}

}  // namespace memdep
