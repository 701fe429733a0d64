#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "memdep/multiset.hpp"
#include "memdep/names.hpp"

namespace memdep {

/// Rule forms of an active membrane system without charges.
enum class RuleKind {
  Evolve,         // (a) [a -> u]_h
  SendIn,         // (b) a []_h -> [b]_h
  SendOut,        // (c) [a]_h -> []_h b
  Dissolve,       // (d) [a]_h -> b
  DivideElem,     // (e) [a]_h -> [b]_h [c]_h
  DivideNonElem,  // (f) [a [h1][h2][h3]]_h0 -> [b [h1][h3]]_h0 [c [h2][h3]]_h0
};

/// Single letter used for the kind, `a` through `f`.
char kind_letter(RuleKind kind);

struct Rule {
  RuleKind kind = RuleKind::Evolve;
  LabelId label;  // h, or h0 for DivideNonElem
  std::array<LabelId, 3> child_labels{};  // h1, h2, h3 (DivideNonElem only)
  ObjectId lhs;
  Multiset rhs;     // Evolve only; may be empty (lambda)
  ObjectId first;   // b for kinds (b)-(f)
  ObjectId second;  // c for kinds (e) and (f)
  std::size_t index = 0;  // position in R

  static Rule evolve(LabelId h, ObjectId a, Multiset u);
  static Rule send_in(LabelId h, ObjectId a, ObjectId b);
  static Rule send_out(LabelId h, ObjectId a, ObjectId b);
  static Rule dissolve(LabelId h, ObjectId a, ObjectId b);
  static Rule divide_elem(LabelId h, ObjectId a, ObjectId b, ObjectId c);
  static Rule divide_non_elem(LabelId h0, std::array<LabelId, 3> children, ObjectId a,
                              ObjectId b, ObjectId c);

  /// True for every kind other than Evolve: the membrane itself is the subject.
  bool is_membrane_rule() const noexcept { return kind != RuleKind::Evolve; }

  bool operator==(const Rule&) const = default;
};

struct MembraneNode {
  LabelId label;
  std::vector<MembraneNode> children;

  bool operator==(const MembraneNode&) const = default;
};

/// An active membrane system (Gamma, H, mu, w_1..w_m, R) used as a recognizer.
///
/// Initial contents are keyed by label: every membrane carrying label h starts
/// with `initial_contents[h]`.
struct MembraneSystem {
  std::set<ObjectId> alphabet;
  std::set<LabelId> labels;
  MembraneNode structure{env_label(), {}};
  std::map<LabelId, Multiset> initial_contents;
  std::vector<Rule> rules;
  std::optional<LabelId> input_label;
  ObjectId yes{"yes"};
  ObjectId no{"no"};

  bool operator==(const MembraneSystem&) const = default;
};

struct ValidationIssue {
  std::string code;
  std::string message;
  std::string location;  // e.g. "rule 3", "structure", "contents h"

  bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const noexcept { return errors.empty(); }
  bool has_error(std::string_view code) const;
  bool has_warning(std::string_view code) const;

  bool operator==(const ValidationReport&) const = default;
};

/// Checks every well-formedness condition of the tuple. Errors are data; never throws.
ValidationReport validate_system(const MembraneSystem& sys);

/// Unique parent label of the membranes labelled `h`. Throws Error(NotFound)
/// when `h` is env or does not occur in the structure.
LabelId parent_label(const MembraneSystem& sys, const LabelId& h);

/// Label -> parent label over the structure (env excluded). Only meaningful on
/// validated systems, where the relation is a function.
std::map<LabelId, LabelId> label_parents(const MembraneSystem& sys);

/// Labels occurring in the structure, env included.
std::set<LabelId> structure_labels(const MembraneSystem& sys);

bool is_dissolution_free(const MembraneSystem& sys);

/// Renumbers `rules[i].index = i`.
void reindex_rules(MembraneSystem& sys);

}  // namespace memdep
