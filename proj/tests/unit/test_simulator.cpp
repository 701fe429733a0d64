#include <doctest.h>

#include <functional>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "memdep/depgraph.hpp"
#include "memdep/error.hpp"
#include "memdep/simulator.hpp"
#include "memdep/textio.hpp"

using namespace memdep;

namespace {

MembraneSystem sys_of(const std::string& text) { return parse_system(text); }

const MembraneInstance& child(const Configuration& c, std::size_t i) { return c.root.children.at(i); }

std::vector<std::string> child_contents(const MembraneInstance& m) {
  std::vector<std::string> out;
  for (const auto& c : m.children) out.push_back(format_multiset(c.contents));
  std::sort(out.begin(), out.end());
  return out;
}

ComputationTrace synthetic(std::size_t steps, std::vector<std::pair<std::size_t, std::string>> emit,
                           bool halted = true) {
  ComputationTrace t;
  t.configurations.resize(steps + 1);
  t.emissions.resize(steps + 1);
  for (const auto& [k, o] : emit) {
    t.emissions.at(k).add(ObjectId{o});
    t.configurations.back().root.contents.add(ObjectId{o});
  }
  t.halted = halted;
  t.halt_reason = halted ? HaltReason::Halted : HaltReason::StepLimit;
  return t;
}

void check_label_tree(const MembraneInstance& m, const std::map<LabelId, LabelId>& parents) {
  for (const auto& c : m.children) {
    CHECK(parents.at(c.label) == m.label);
    check_label_tree(c, parents);
  }
}

}  // namespace

TEST_SUITE("simulator") {
  TEST_CASE("applicable_rules") {
    const auto sys = sys_of("@objects a b yes no\n@structure [env [h]]\n@contents h: a\n@rules\n[a -> b]_h\n");
    auto cfg = initial_configuration(sys);
    const auto apps = applicable_rules(cfg, sys);
    REQUIRE(apps.size() == 1);
    CHECK(apps[0].path == std::vector<std::size_t>{0});
    CHECK(apps[0].rule_index == 0);

    cfg.root.children[0].contents = {};
    CHECK(applicable_rules(cfg, sys).empty());
  }

  TEST_CASE("non-elementary division needs all three child labels") {
    const auto sys = sys_of(
        "@objects a b c yes no\n@structure [env [h0 [h1] [h3]]]\n@contents h0: a\n@labels env h0 h1 h2 h3\n"
        "@rules\n[a [h1][h2][h3]]_h0 -> [b [h1][h3]]_h0 [c [h2][h3]]_h0\n");
    CHECK(applicable_rules(initial_configuration(sys), sys).empty());
    CHECK(run(sys).final_step() == 0);
  }

  TEST_CASE("dissolution cannot be simulated") {
    const auto sys = parse_system(read_data("dissolve.pms"));
    CHECK_THROWS_WITH_AS(applicable_rules(initial_configuration(sys), sys),
                         doctest::Contains("UNSUPPORTED_RULE"), Error);
    CHECK_THROWS_AS(run(sys), Error);
  }

  TEST_CASE("maximal parallelism rewrites every occurrence") {
    const auto sys = sys_of(
        "@objects a b c d yes no\n@structure [env [h]]\n@contents h: a a b\n@rules\n[a -> c]_h\n[b -> d]_h\n");
    for (auto sched : {Scheduler::Lex, Scheduler::Exhaustive}) {
      const auto t = step(initial_configuration(sys), sys, sched);
      CHECK(child(t.next, 0).contents == Multiset::parse_words("c c d"));
      CHECK(t.next.step == 1);
    }
  }

  TEST_CASE("evolution happens before division, so both copies get the products") {
    const auto sys = sys_of(
        "@objects a b c x y yes no\n@structure [env [h]]\n@contents h: a x\n@rules\n"
        "[x -> y]_h\n[a]_h -> [b]_h [c]_h\n");
    const auto t = step(initial_configuration(sys), sys, Scheduler::Lex);
    REQUIRE(t.next.root.children.size() == 2);
    CHECK(child_contents(t.next.root) == std::vector<std::string>{"b y", "c y"});
    CHECK(successors(initial_configuration(sys), sys).size() == 1);
  }

  TEST_CASE("send-out releases into the environment") {
    const auto sys = sys_of("@objects a yes no\n@structure [env [h]]\n@contents h: a\n@rules\n[a]_h -> []_h yes\n");
    const auto t = step(initial_configuration(sys), sys, Scheduler::Lex);
    CHECK(t.next.environment() == Multiset{ObjectId{"yes"}});
    CHECK(child(t.next, 0).contents.empty());
    CHECK(t.emitted == Multiset{ObjectId{"yes"}});
  }

  TEST_CASE("one membrane rule per membrane and step") {
    const auto sys = sys_of("@objects a yes no\n@structure [env [h]]\n@contents h: a a a\n@rules\n[a]_h -> []_h yes\n");
    const auto trace = run(sys);
    CHECK(trace.final_step() == 3);
    CHECK(trace.emission_steps(ObjectId{"yes"}) == std::vector<std::size_t>{1, 2, 3});
    CHECK(judge(trace, Condition::General) == Verdict::accept());
    CHECK(judge(trace, Condition::Standard) == Verdict::violation(ViolationCode::NotLastStep));
    CHECK(repeated_signals(trace).size() == 2);
  }

  TEST_CASE("send-in moves an object from the parent into the child") {
    const auto sys = sys_of(
        "@objects a b yes no\n@structure [env [h] [h]]\n@contents env: a a a\n@rules\na []_h -> [b]_h\n");
    const auto t = step(initial_configuration(sys), sys, Scheduler::Lex);
    CHECK(t.next.environment() == Multiset{ObjectId{"a"}});
    CHECK(child_contents(t.next.root) == std::vector<std::string>{"b", "b"});
    // Either child may be the one left without a visitor only if no a remains.
    for (const auto& s : successors(initial_configuration(sys), sys)) {
      CHECK(s.next.environment().count(ObjectId{"a"}) == 1);
    }
  }

  TEST_CASE("non-elementary division splits the children") {
    const auto sys = sys_of(
        "@objects a b c u v w yes no\n@structure [env [h0 [h1] [h2] [h3]]]\n"
        "@contents h0: a\n@contents h1: u\n@contents h2: v\n@contents h3: w\n@rules\n"
        "[a [h1][h2][h3]]_h0 -> [b [h1][h3]]_h0 [c [h2][h3]]_h0\n");
    const auto t = step(initial_configuration(sys), sys, Scheduler::Lex);
    REQUIRE(t.next.root.children.size() == 2);
    const auto& first = child(t.next, 0);
    const auto& second = child(t.next, 1);
    CHECK(first.contents == Multiset{ObjectId{"b"}});
    CHECK(second.contents == Multiset{ObjectId{"c"}});
    CHECK(child_contents(first) == std::vector<std::string>{"u", "w"});
    CHECK(child_contents(second) == std::vector<std::string>{"v", "w"});
    CHECK(first.children[0].label == LabelId{"h1"});
    CHECK(second.children[0].label == LabelId{"h2"});
  }

  TEST_CASE("three-step chain across two membranes") {
    const auto sys = parse_system(read_data("relay.pms"));
    const auto trace = run(sys);
    REQUIRE(trace.halted);
    CHECK(trace.final_step() == 3);
    CHECK(trace.first_emission(ObjectId{"yes"}) == 3u);
    // Hand execution: h{a} -> h{b} -> skin{yes} -> env{yes}.
    CHECK(format_configuration(trace.configurations[1]) == "[env{} [skin{} [h{b}]]]");
    CHECK(format_configuration(trace.configurations[2]) == "[env{} [skin{yes} [h{}]]]");
    CHECK(format_configuration(trace.configurations[3]) == "[env{yes} [skin{} [h{}]]]");
    CHECK(judge(trace, Condition::Standard) == Verdict::accept());
    CHECK(judge(trace, Condition::Restricted) == Verdict::accept());
  }

  TEST_CASE("a rule cycle runs into the step limit") {
    const auto sys = parse_system(read_data("cyclic.pms"));
    Limits limits;
    limits.step_limit = 100;
    const auto trace = run(sys, {}, Scheduler::Lex, limits);
    CHECK_FALSE(trace.halted);
    CHECK(trace.halt_reason == HaltReason::StepLimit);
    CHECK(trace.final_step() == 100);
    CHECK(judge(trace, Condition::General) == Verdict::violation(ViolationCode::StepLimit));
    CHECK_THROWS_WITH_AS(judge(trace, Condition::Standard), doctest::Contains("NOT_HALTED"), Error);
  }

  TEST_CASE("population cap stops exponential growth") {
    const auto sys = sys_of("@objects a yes no\n@contents env: a\n@rules\n[a -> a a]_env\n");
    Limits limits;
    limits.population_cap = 1000;
    const auto trace = run(sys, {}, Scheduler::Lex, limits);
    CHECK(trace.halt_reason == HaltReason::PopulationCap);
    CHECK(trace.final_step() == 9);  // 2^9 = 512 <= 1000 < 1024
    CHECK(judge(trace, Condition::General) == Verdict::violation(ViolationCode::PopulationCap));
  }

  TEST_CASE("membrane cap stops runaway division") {
    const auto sys = sys_of("@objects a yes no\n@structure [env [h]]\n@contents h: a\n@rules\n[a]_h -> [a]_h [a]_h\n");
    Limits limits;
    limits.membrane_cap = 50;
    const auto trace = run(sys, {}, Scheduler::Lex, limits);
    CHECK(trace.halt_reason == HaltReason::PopulationCap);
    CHECK(trace.configurations.back().membrane_count() <= 50);
  }

  TEST_CASE("empty rule set halts immediately") {
    const auto trace = run(parse_system(read_data("empty.pms")));
    CHECK(trace.halted);
    CHECK(trace.final_step() == 0);
    CHECK(judge(trace, Condition::General) == Verdict::violation(ViolationCode::NoOutput));
  }

  TEST_CASE("input goes into the input membrane") {
    const auto sys = sys_of("@objects a yes no\n@structure [env [skin]]\n@input skin\n@rules\n[a]_skin -> []_skin yes\n");
    CHECK(judge(run(sys, Multiset{ObjectId{"a"}}), Condition::Standard) == Verdict::accept());
    CHECK(judge(run(sys), Condition::Standard) == Verdict::violation(ViolationCode::NoOutput));
  }

  TEST_CASE("judge under the general condition") {
    CHECK(judge(synthetic(7, {{7, "yes"}, {6, "no"}}), Condition::General) == Verdict::reject());
    CHECK(judge(synthetic(7, {{6, "yes"}, {7, "no"}}), Condition::General) == Verdict::accept());
    CHECK(judge(synthetic(4, {{4, "yes"}, {4, "no"}}), Condition::General) ==
          Verdict::violation(ViolationCode::SameTimestep));
    // General does not need halting once a signal is out.
    CHECK(judge(synthetic(9, {{2, "yes"}}, false), Condition::General) == Verdict::accept());
    CHECK(judge(synthetic(3, {}), Condition::General) == Verdict::violation(ViolationCode::NoOutput));
  }

  TEST_CASE("judge under the standard and restricted conditions") {
    CHECK(judge(synthetic(5, {{3, "yes"}}), Condition::Standard) ==
          Verdict::violation(ViolationCode::NotLastStep));
    CHECK(judge(synthetic(5, {{5, "no"}}), Condition::Standard) == Verdict::reject());
    CHECK(judge(synthetic(5, {{5, "no"}, {5, "yes"}}), Condition::Standard) ==
          Verdict::violation(ViolationCode::BothReachable));
    CHECK(judge(synthetic(5, {}), Condition::Standard) == Verdict::violation(ViolationCode::NoOutput));
    CHECK_THROWS_AS(judge(synthetic(5, {{5, "yes"}}, false), Condition::Standard), Error);

    auto junk = synthetic(2, {{2, "yes"}});
    CHECK(judge(junk, Condition::Restricted) == Verdict::accept());
    junk.configurations.back().root.contents.add(ObjectId{"w"});
    CHECK(judge(junk, Condition::Standard) == Verdict::accept());
    CHECK(judge(junk, Condition::Restricted) == Verdict::violation(ViolationCode::NotRestricted));
  }

  TEST_CASE("explore_all: deterministic system gives one verdict") {
    const auto r = explore_all(parse_system(read_data("relay.pms")));
    CHECK(r.verdicts.at(Condition::Standard) == std::set<Verdict>{Verdict::accept()});
    CHECK(r.confluent(Condition::General));
  }

  TEST_CASE("explore_all: competing rules give both verdicts") {
    const auto sys = parse_system(read_data("nonconfluent.pms"));
    CHECK(successors(initial_configuration(sys), sys).size() == 2);
    const auto r = explore_all(sys);
    CHECK(r.verdicts.at(Condition::Standard) ==
          std::set<Verdict>{Verdict::accept(), Verdict::reject()});
    CHECK_FALSE(r.confluent(Condition::General));
  }

  TEST_CASE("explore_all: branching that commutes stays confluent") {
    const auto sys = sys_of(
        "@objects a b p q yes no\n@structure [env [h]]\n@contents h: a\n@rules\n"
        "[a -> p]_h\n[a -> q]_h\n[p]_h -> []_h yes\n[q]_h -> []_h yes\n");
    CHECK(successors(initial_configuration(sys), sys).size() == 2);
    const auto r = explore_all(sys);
    CHECK(r.confluent(Condition::Standard));
    CHECK(*r.verdicts.at(Condition::Standard).begin() == Verdict::accept());
  }

  TEST_CASE("explore_all: object may feed a membrane rule or an evolution rule") {
    const auto sys = sys_of(
        "@objects a b yes no\n@structure [env [h]]\n@contents h: a a\n@rules\n"
        "[a -> b]_h\n[a]_h -> []_h yes\n");
    // Either one a leaves and the other evolves, or both evolve.
    CHECK(successors(initial_configuration(sys), sys).size() == 2);
  }

  TEST_CASE("explore_all: limits") {
    const auto sys = parse_system(read_data("cyclic.pms"));
    ExploreLimits small;
    small.max_steps = 20;
    const auto r = explore_all(sys, {}, small);
    CHECK(r.verdicts.at(Condition::Standard) ==
          std::set<Verdict>{Verdict::violation(ViolationCode::StepLimit)});
    small.max_configs = 5;
    CHECK_THROWS_WITH_AS(explore_all(sys, {}, small), doctest::Contains("LIMIT_EXCEEDED"), Error);
  }

  TEST_CASE("lex step is one of the maximal-parallel successors (corpus)") {
    for (const auto& e : corpus::full()) {
      CAPTURE(e.name);
      auto cfg = initial_configuration(e.system, e.input);
      for (int k = 0; k < 6; ++k) {
        const auto succ = successors(cfg, e.system);
        const auto lex = step(cfg, e.system, Scheduler::Lex);
        if (succ.empty()) {
          CHECK(lex.next == cfg);
          break;
        }
        const auto key = canonical_key(lex.next.root);
        CHECK(std::any_of(succ.begin(), succ.end(), [&](const Transition& t) {
          return canonical_key(t.next.root) == key && t.emitted == lex.emitted;
        }));
        cfg = lex.next;
      }
    }
  }

  TEST_CASE("every successor is maximal: nothing applicable is left idle") {
    // With no evolution rules, each membrane instance that could fire a
    // membrane rule must fire exactly one.
    const auto sys = sys_of(
        "@objects a b c yes no\n@structure [env [h] [h]]\n@contents h: a b\n@rules\n"
        "[a]_h -> []_h yes\n[b]_h -> [c]_h [c]_h\n");
    const auto succ = successors(initial_configuration(sys), sys);
    CHECK(succ.size() == 3);  // per membrane: send a out or divide on b; up to symmetry
    for (const auto& t : succ) {
      std::size_t acted = 0;
      acted += t.next.environment().count(ObjectId{"yes"});
      acted += (t.next.root.children.size() - 2);
      CHECK(acted == 2);
    }
  }

  TEST_CASE("evolution rules conserve: next = sum of right-hand sides") {
    for (const auto& e : corpus::families()) {
      CAPTURE(e.name);
      const auto sys = normalize(e.system, e.input);
      auto cfg = initial_configuration(sys);
      for (int k = 0; k < 5; ++k) {
        Multiset expected;
        bool deterministic = true;
        for (const auto& [o, n] : cfg.environment()) {
          std::vector<const Rule*> rules;
          for (const auto& r : sys.rules) {
            if (r.lhs == o) rules.push_back(&r);
          }
          if (rules.size() > 1) deterministic = false;
          if (rules.empty()) {
            expected.add(o, n);
          } else {
            expected += rules.front()->rhs.scaled(n);
          }
        }
        if (!deterministic) break;
        const auto t = step(cfg, sys, Scheduler::Lex);
        CHECK(t.next.environment() == expected);
        cfg = t.next;
      }
    }
  }

  TEST_CASE("label tree of reachable configurations matches the structure") {
    for (const auto& e : corpus::full()) {
      CAPTURE(e.name);
      const auto parents = label_parents(e.system);
      Limits limits;
      limits.step_limit = 30;
      const auto trace = run(e.system, e.input, Scheduler::Lex, limits);
      for (const auto& c : trace.configurations) check_label_tree(c.root, parents);
    }
  }

  TEST_CASE("canonical key ignores sibling order") {
    MembraneInstance a{env_label(), {}, {{LabelId{"h"}, Multiset{ObjectId{"x"}}, {}},
                                         {LabelId{"h"}, Multiset{ObjectId{"y"}}, {}}}};
    MembraneInstance b = a;
    std::swap(b.children[0], b.children[1]);
    CHECK(canonical_key(a) == canonical_key(b));
    b.children[0].contents.add(ObjectId{"x"});
    CHECK(canonical_key(a) != canonical_key(b));
  }
}
