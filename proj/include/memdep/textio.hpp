#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "memdep/graph.hpp"
#include "memdep/system.hpp"

namespace memdep {

// Membrane systems (`.pms`):
//
//   # comment
//   @objects a b yes no
//   @labels env skin h
//   @structure [env [skin [h]]]
//   @contents h: a a b
//   @input h
//   @yes yes
//   @no no
//   @rules
//   [a -> b c]_h
//   a []_h -> [b]_h
//   [a]_h -> []_h b
//   [a]_h -> b
//   [a]_h -> [b]_h [c]_h
//   [a [h1][h2][h3]]_h0 -> [b [h1][h3]]_h0 [c [h2][h3]]_h0
//
// Dependency graphs (`.dg`) use `@nodes`, `@in`, `@edges` (one `u v` pair per
// line) and optional `@yes`/`@no` overrides; `;` separates lines. Plain s-t
// instances use `@nodes`, `@edges`, `@s`, `@t`.

/// Parses and validates a system. Throws Error(SyntaxError) with a span on
/// malformed text and Error(InvalidSystem) when validation reports errors.
MembraneSystem parse_system(std::string_view text);

/// Parses without running validate_system (syntax errors still throw).
MembraneSystem parse_system_unchecked(std::string_view text);

/// Canonical text form. parse_system(serialize_system(s)) == s.
std::string serialize_system(const MembraneSystem& sys);

/// Throws Error(SyntaxError | UndeclaredNode | MissingDistinguished).
/// Non-fatal remarks (such as a missing `@in` section) go to `warnings`.
DependencyGraph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string serialize_graph(const DependencyGraph& g);

StconInstance parse_stcon(std::string_view text);
std::string serialize_stcon(const StconInstance& inst);

struct DotOptions {
  bool prune = false;  // drop nodes with no edges that are not in, yes or no
};

/// Graphviz digraph. In-set nodes are boxes; yes and no are double circles.
std::string emit_dot(const DependencyGraph& g, const DotOptions& options = {});

/// `a a b` (sorted, repeated occurrences).
std::string format_multiset(const Multiset& m);
/// Compact form for large counts: `a b^3`.
std::string format_multiset_compact(const Multiset& m);
std::string format_rule(const Rule& rule);
std::string format_structure(const MembraneNode& node);

}  // namespace memdep
