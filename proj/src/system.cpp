#include "memdep/system.hpp"

#include <algorithm>
#include <functional>

#include "memdep/error.hpp"

namespace memdep {

char kind_letter(RuleKind kind) {
  switch (kind) {
    case RuleKind::Evolve: return 'a';
    case RuleKind::SendIn: return 'b';
    case RuleKind::SendOut: return 'c';
    case RuleKind::Dissolve: return 'd';
    case RuleKind::DivideElem: return 'e';
    case RuleKind::DivideNonElem: return 'f';
  }
  return '?';
}

Rule Rule::evolve(LabelId h, ObjectId a, Multiset u) {
  Rule r;
  r.kind = RuleKind::Evolve;
  r.label = std::move(h);
  r.lhs = std::move(a);
  r.rhs = std::move(u);
  return r;
}

Rule Rule::send_in(LabelId h, ObjectId a, ObjectId b) {
  Rule r;
  r.kind = RuleKind::SendIn;
  r.label = std::move(h);
  r.lhs = std::move(a);
  r.first = std::move(b);
  return r;
}

Rule Rule::send_out(LabelId h, ObjectId a, ObjectId b) {
  Rule r;
  r.kind = RuleKind::SendOut;
  r.label = std::move(h);
  r.lhs = std::move(a);
  r.first = std::move(b);
  return r;
}

Rule Rule::dissolve(LabelId h, ObjectId a, ObjectId b) {
  Rule r;
  r.kind = RuleKind::Dissolve;
  r.label = std::move(h);
  r.lhs = std::move(a);
  r.first = std::move(b);
  return r;
}

Rule Rule::divide_elem(LabelId h, ObjectId a, ObjectId b, ObjectId c) {
  Rule r;
  r.kind = RuleKind::DivideElem;
  r.label = std::move(h);
  r.lhs = std::move(a);
  r.first = std::move(b);
  r.second = std::move(c);
  return r;
}

Rule Rule::divide_non_elem(LabelId h0, std::array<LabelId, 3> children, ObjectId a,
                           ObjectId b, ObjectId c) {
  Rule r;
  r.kind = RuleKind::DivideNonElem;
  r.label = std::move(h0);
  r.child_labels = std::move(children);
  r.lhs = std::move(a);
  r.first = std::move(b);
  r.second = std::move(c);
  return r;
}

bool ValidationReport::has_error(std::string_view code) const {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const ValidationIssue& i) { return i.code == code; });
}

bool ValidationReport::has_warning(std::string_view code) const {
  return std::any_of(warnings.begin(), warnings.end(),
                     [&](const ValidationIssue& i) { return i.code == code; });
}

namespace {

void walk(const MembraneNode& node, const MembraneNode* parent,
          const std::function<void(const MembraneNode&, const MembraneNode*)>& fn) {
  fn(node, parent);
  for (const auto& child : node.children) walk(child, &node, fn);
}

std::string rule_location(const Rule& r) { return "rule " + std::to_string(r.index + 1); }

}  // namespace

std::set<LabelId> structure_labels(const MembraneSystem& sys) {
  std::set<LabelId> out;
  walk(sys.structure, nullptr, [&](const MembraneNode& n, const MembraneNode*) {
    out.insert(n.label);
  });
  return out;
}

std::map<LabelId, LabelId> label_parents(const MembraneSystem& sys) {
  std::map<LabelId, LabelId> out;
  walk(sys.structure, nullptr, [&](const MembraneNode& n, const MembraneNode* parent) {
    if (parent != nullptr) out.emplace(n.label, parent->label);
  });
  return out;
}

LabelId parent_label(const MembraneSystem& sys, const LabelId& h) {
  if (h == env_label()) throw Error(ErrorCode::NotFound, "the environment has no parent");
  auto parents = label_parents(sys);
  auto it = parents.find(h);
  if (it == parents.end()) {
    throw Error(ErrorCode::NotFound, "label '" + h.str() + "' does not occur in the structure");
  }
  return it->second;
}

bool is_dissolution_free(const MembraneSystem& sys) {
  return std::none_of(sys.rules.begin(), sys.rules.end(),
                      [](const Rule& r) { return r.kind == RuleKind::Dissolve; });
}

void reindex_rules(MembraneSystem& sys) {
  for (std::size_t i = 0; i < sys.rules.size(); ++i) sys.rules[i].index = i;
}

ValidationReport validate_system(const MembraneSystem& sys) {
  ValidationReport report;
  auto error = [&](std::string code, std::string msg, std::string loc) {
    report.errors.push_back({std::move(code), std::move(msg), std::move(loc)});
  };
  auto warn = [&](std::string code, std::string msg, std::string loc) {
    report.warnings.push_back({std::move(code), std::move(msg), std::move(loc)});
  };

  for (const auto& o : sys.alphabet) {
    if (!is_object_token(o.str())) error("INVALID_NAME", "bad object name '" + o.str() + "'", "objects");
  }
  for (const auto& h : sys.labels) {
    if (!is_label_token(h.str())) error("INVALID_NAME", "bad label name '" + h.str() + "'", "labels");
  }
  if (!sys.labels.contains(env_label())) {
    error("MISSING_ENV_LABEL", "label set must contain env", "labels");
  }

  // Structure: rooted at env, labels declared, parent label unique per label.
  if (sys.structure.label != env_label()) {
    error("ROOT_NOT_ENV", "structure root must be env, found '" + sys.structure.label.str() + "'",
          "structure");
  }
  std::map<LabelId, std::set<LabelId>> parents_seen;
  walk(sys.structure, nullptr, [&](const MembraneNode& n, const MembraneNode* parent) {
    if (!sys.labels.contains(n.label)) {
      error("UNKNOWN_LABEL", "structure uses undeclared label '" + n.label.str() + "'", "structure");
    }
    if (parent != nullptr) {
      if (n.label == env_label()) {
        error("ENV_NOT_ROOT", "env may only label the root membrane", "structure");
      }
      parents_seen[n.label].insert(parent->label);
    }
  });
  for (const auto& [h, ps] : parents_seen) {
    if (ps.size() > 1) {
      std::string list;
      for (const auto& p : ps) list += (list.empty() ? "" : ", ") + p.str();
      error("AMBIGUOUS_PARENT", "label '" + h.str() + "' occurs under parents {" + list + "}",
            "structure");
    }
  }
  const auto used = structure_labels(sys);

  // Distinguished objects.
  if (!sys.alphabet.contains(sys.yes)) {
    error("MISSING_YES", "alphabet lacks the yes object '" + sys.yes.str() + "'", "objects");
  }
  if (!sys.alphabet.contains(sys.no)) {
    error("MISSING_NO", "alphabet lacks the no object '" + sys.no.str() + "'", "objects");
  }
  if (sys.yes == sys.no) error("YES_EQUALS_NO", "yes and no must differ", "objects");

  std::set<ObjectId> mentioned{sys.yes, sys.no};
  auto check_object = [&](const ObjectId& o, const std::string& loc) {
    mentioned.insert(o);
    if (!sys.alphabet.contains(o)) {
      error("UNKNOWN_OBJECT", "object '" + o.str() + "' is not in the alphabet", loc);
    }
  };
  auto check_label = [&](const LabelId& h, const std::string& loc) {
    if (!sys.labels.contains(h)) {
      error("UNKNOWN_LABEL", "label '" + h.str() + "' is not in H", loc);
      return false;
    }
    return true;
  };

  for (const auto& [h, contents] : sys.initial_contents) {
    const std::string loc = "contents " + h.str();
    if (check_label(h, loc) && !used.contains(h)) {
      error("CONTENTS_LABEL_ABSENT", "no membrane labelled '" + h.str() + "' in the structure", loc);
    }
    for (const auto& [o, _] : contents) check_object(o, loc);
  }

  if (sys.input_label) {
    if (check_label(*sys.input_label, "input") && !used.contains(*sys.input_label)) {
      error("INPUT_LABEL_ABSENT",
            "no membrane labelled '" + sys.input_label->str() + "' in the structure", "input");
    }
  }

  const auto parents = label_parents(sys);
  for (const auto& r : sys.rules) {
    const std::string loc = rule_location(r);
    bool labels_ok = check_label(r.label, loc);
    if (r.kind == RuleKind::DivideNonElem) {
      for (const auto& c : r.child_labels) labels_ok = check_label(c, loc) && labels_ok;
    }
    check_object(r.lhs, loc);
    switch (r.kind) {
      case RuleKind::Evolve:
        for (const auto& [o, _] : r.rhs) check_object(o, loc);
        if (r.rhs.empty()) warn("LAMBDA_RHS", "rule erases its object (empty right-hand side)", loc);
        break;
      case RuleKind::DivideElem:
      case RuleKind::DivideNonElem:
        check_object(r.first, loc);
        check_object(r.second, loc);
        break;
      default:
        check_object(r.first, loc);
        break;
    }
    if (r.is_membrane_rule()) {
      bool touches_env = r.label == env_label();
      if (r.kind == RuleKind::DivideNonElem) {
        for (const auto& c : r.child_labels) touches_env = touches_env || c == env_label();
      }
      if (touches_env) {
        error("ENV_MEMBRANE_RULE", "the environment cannot be the subject of a rule of kind (" +
                                       std::string(1, kind_letter(r.kind)) + ")",
              loc);
      }
    }
    if (labels_ok && !used.contains(r.label)) {
      warn("UNREACHABLE_RULE", "label '" + r.label.str() + "' does not occur in the structure", loc);
    } else if (labels_ok && r.kind == RuleKind::DivideNonElem) {
      for (const auto& c : r.child_labels) {
        auto it = parents.find(c);
        if (it == parents.end() || it->second != r.label) {
          warn("UNREACHABLE_RULE",
               "child label '" + c.str() + "' never occurs inside '" + r.label.str() + "'", loc);
          break;
        }
      }
    }
  }

  for (const auto& o : sys.alphabet) {
    if (!mentioned.contains(o)) warn("UNUSED_OBJECT", "object '" + o.str() + "' is never used", "objects");
  }
  for (const auto& h : sys.labels) {
    if (!used.contains(h)) warn("UNUSED_LABEL", "label '" + h.str() + "' labels no membrane", "labels");
  }
  return report;
}

}  // namespace memdep
