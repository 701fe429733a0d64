#include <doctest.h>

#include <functional>
#include <limits>

#include "corpus.hpp"
#include "memdep/error.hpp"
#include "memdep/multiset.hpp"
#include "memdep/system.hpp"
#include "memdep/textio.hpp"

using namespace memdep;

namespace {

MembraneSystem two_membrane() {
  MembraneSystem sys;
  sys.alphabet = {ObjectId{"a"}, ObjectId{"b"}, ObjectId{"yes"}, ObjectId{"no"}};
  sys.labels = {env_label(), LabelId{"h"}};
  sys.structure = {env_label(), {{LabelId{"h"}, {}}}};
  sys.initial_contents[LabelId{"h"}] = Multiset{ObjectId{"a"}};
  sys.rules.push_back(Rule::evolve(LabelId{"h"}, ObjectId{"a"}, Multiset{ObjectId{"b"}}));
  sys.rules.push_back(Rule::send_out(LabelId{"h"}, ObjectId{"b"}, ObjectId{"yes"}));
  reindex_rules(sys);
  return sys;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("multiset keeps no zero entries and compares by content") {
    Multiset m;
    m.add(ObjectId{"a"}, 2);
    m.add(ObjectId{"b"});
    m.remove(ObjectId{"b"});
    CHECK(m.distinct() == 1);
    CHECK(m == Multiset::parse_words("a a"));
    CHECK(m.total() == 2);
    CHECK_THROWS_AS(m.remove(ObjectId{"a"}, 3), std::logic_error);
    CHECK(Multiset::parse_words("") .empty());
  }

  TEST_CASE("multiset arithmetic saturates") {
    constexpr auto max = std::numeric_limits<Multiset::Count>::max();
    CHECK(saturating_add(max, 1) == max);
    CHECK(saturating_mul(max / 2, 3) == max);
    CHECK(saturating_mul(0, max) == 0);
    Multiset m;
    m.add(ObjectId{"a"}, max);
    m.add(ObjectId{"b"}, 5);
    CHECK(m.total() == max);
    CHECK(m.scaled(2).count(ObjectId{"a"}) == max);
  }

  TEST_CASE("token rules") {
    CHECK(is_object_token("a"));
    CHECK(is_object_token("x_1'"));
    CHECK(is_object_token("a@h"));
    CHECK_FALSE(is_object_token("@a"));
    CHECK_FALSE(is_object_token("a@"));
    CHECK_FALSE(is_object_token(""));
    CHECK_FALSE(is_object_token("a-b"));
    CHECK(is_label_token("skin_2"));
    CHECK_FALSE(is_label_token("h@x"));
  }

  TEST_CASE("well-formed two-membrane system validates") {
    const auto report = validate_system(two_membrane());
    CHECK(report.ok());
    CHECK(report.warnings.empty());
  }

  TEST_CASE("rule with an undeclared label is UNKNOWN_LABEL") {
    auto sys = two_membrane();
    sys.rules.push_back(Rule::evolve(LabelId{"k"}, ObjectId{"a"}, {}));
    reindex_rules(sys);
    const auto report = validate_system(sys);
    CHECK(report.has_error("UNKNOWN_LABEL"));
    CHECK(report.errors.front().location == "rule 3");
  }

  TEST_CASE("a label under two different parent labels is AMBIGUOUS_PARENT") {
    // env(p1(h), p2(h))
    MembraneSystem sys;
    sys.alphabet = {ObjectId{"yes"}, ObjectId{"no"}};
    sys.labels = {env_label(), LabelId{"p1"}, LabelId{"p2"}, LabelId{"h"}};
    sys.structure = {env_label(),
                     {{LabelId{"p1"}, {{LabelId{"h"}, {}}}}, {LabelId{"p2"}, {{LabelId{"h"}, {}}}}}};
    const auto report = validate_system(sys);
    REQUIRE(report.has_error("AMBIGUOUS_PARENT"));
    CHECK(report.errors.size() == 1);
  }

  TEST_CASE("same label under the same parent label is allowed") {
    MembraneSystem sys;
    sys.alphabet = {ObjectId{"yes"}, ObjectId{"no"}};
    sys.labels = {env_label(), LabelId{"h"}};
    sys.structure = {env_label(), {{LabelId{"h"}, {}}, {LabelId{"h"}, {}}}};
    CHECK(validate_system(sys).ok());
    CHECK(parent_label(sys, LabelId{"h"}) == env_label());
  }

  TEST_CASE("structural errors are reported") {
    MembraneSystem sys;
    sys.alphabet = {ObjectId{"yes"}};
    sys.labels = {LabelId{"skin"}};
    sys.structure = {LabelId{"skin"}, {{env_label(), {}}}};
    sys.yes = ObjectId{"yes"};
    sys.no = ObjectId{"yes"};
    const auto report = validate_system(sys);
    CHECK(report.has_error("MISSING_ENV_LABEL"));
    CHECK(report.has_error("ROOT_NOT_ENV"));
    CHECK(report.has_error("ENV_NOT_ROOT"));
    CHECK(report.has_error("YES_EQUALS_NO"));
    CHECK_FALSE(report.has_error("MISSING_NO"));

    sys.no = ObjectId{"nope"};
    CHECK(validate_system(sys).has_error("MISSING_NO"));
    CHECK_FALSE(validate_system(sys).has_error("MISSING_YES"));
  }

  TEST_CASE("objects, contents and input must refer to declared things") {
    auto sys = two_membrane();
    sys.rules.push_back(Rule::evolve(LabelId{"h"}, ObjectId{"zz"}, {}));
    sys.initial_contents[LabelId{"env"}] = Multiset{ObjectId{"b"}};
    sys.labels.insert(LabelId{"ghost"});
    sys.initial_contents[LabelId{"ghost"}] = Multiset{ObjectId{"a"}};
    sys.input_label = LabelId{"ghost"};
    reindex_rules(sys);
    const auto report = validate_system(sys);
    CHECK(report.has_error("UNKNOWN_OBJECT"));
    CHECK(report.has_error("CONTENTS_LABEL_ABSENT"));
    CHECK(report.has_error("INPUT_LABEL_ABSENT"));
    CHECK(report.has_warning("UNUSED_LABEL"));
    CHECK(report.has_warning("LAMBDA_RHS"));
  }

  TEST_CASE("the environment cannot divide or send") {
    auto sys = two_membrane();
    sys.rules.push_back(Rule::divide_elem(env_label(), ObjectId{"a"}, ObjectId{"a"}, ObjectId{"b"}));
    reindex_rules(sys);
    CHECK(validate_system(sys).has_error("ENV_MEMBRANE_RULE"));
  }

  TEST_CASE("unused objects are warnings") {
    auto sys = two_membrane();
    sys.alphabet.insert(ObjectId{"spare"});
    const auto report = validate_system(sys);
    CHECK(report.ok());
    CHECK(report.has_warning("UNUSED_OBJECT"));
  }

  TEST_CASE("parent_label") {
    const auto sys = parse_system("@objects yes no\n@structure [env [skin [h]]]\n");
    CHECK(parent_label(sys, LabelId{"h"}) == LabelId{"skin"});
    CHECK(parent_label(sys, LabelId{"skin"}) == env_label());
    CHECK_THROWS_AS(parent_label(sys, LabelId{"nowhere"}), Error);
    CHECK_THROWS_AS(parent_label(sys, env_label()), Error);
  }

  TEST_CASE("is_dissolution_free") {
    auto sys = two_membrane();
    CHECK(is_dissolution_free(sys));
    sys.rules.push_back(Rule::divide_elem(LabelId{"h"}, ObjectId{"a"}, ObjectId{"a"}, ObjectId{"b"}));
    CHECK(is_dissolution_free(sys));
    sys.rules.push_back(Rule::dissolve(LabelId{"h"}, ObjectId{"a"}, ObjectId{"b"}));
    CHECK_FALSE(is_dissolution_free(sys));
    CHECK(is_dissolution_free(MembraneSystem{}));
  }

  TEST_CASE("validation is pure and parent_label agrees with every occurrence (corpus)") {
    for (const auto& e : corpus::full()) {
      CAPTURE(e.name);
      const auto first = validate_system(e.system);
      CHECK(first == validate_system(e.system));
      CHECK(first.ok());
      std::function<void(const MembraneNode&)> walk = [&](const MembraneNode& n) {
        for (const auto& c : n.children) {
          CHECK(parent_label(e.system, c.label) == n.label);
          walk(c);
        }
      };
      walk(e.system.structure);
    }
  }
}
