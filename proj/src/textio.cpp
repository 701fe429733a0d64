#include "memdep/textio.hpp"

#include <algorithm>
#include <sstream>

#include "memdep/error.hpp"

namespace memdep {

namespace {

// ---------------------------------------------------------------------------
// Lines, words and sections

struct Line {
  std::string_view text;
  SourceSpan start;
};

SourceSpan advance(const SourceSpan& base, std::size_t by) {
  return {base.line, base.column + by, base.offset + by};
}

[[noreturn]] void syntax_error(const std::string& message, const SourceSpan& span) {
  throw Error(ErrorCode::SyntaxError, message, span);
}

/// Splits into lines with comments and trailing CR removed. With
/// `semicolons`, `;` also ends a line.
std::vector<Line> split_lines(std::string_view text, bool semicolons) {
  std::vector<Line> out;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t piece_start = 0;
    while (true) {
      std::size_t semi = semicolons ? raw.find(';', piece_start) : std::string_view::npos;
      std::size_t piece_end = semi == std::string_view::npos ? raw.size() : semi;
      out.push_back({raw.substr(piece_start, piece_end - piece_start),
                     {line_no, piece_start + 1, pos + piece_start}});
      if (semi == std::string_view::npos) break;
      piece_start = semi + 1;
    }
    if (end == text.size()) break;
    pos = end + 1;
    ++line_no;
  }
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

struct Word {
  std::string text;
  SourceSpan span;
};

std::vector<Word> split_words(const Line& line) {
  std::vector<Word> out;
  std::size_t i = 0;
  const auto& t = line.text;
  while (i < t.size()) {
    while (i < t.size() && is_space(t[i])) ++i;
    if (i >= t.size()) break;
    std::size_t j = i;
    while (j < t.size() && !is_space(t[j])) ++j;
    out.push_back({std::string(t.substr(i, j - i)), advance(line.start, i)});
    i = j;
  }
  return out;
}

bool blank(const Line& line) {
  return std::all_of(line.text.begin(), line.text.end(), is_space);
}

struct Section {
  std::string name;
  SourceSpan span;
  std::vector<Line> lines;  // first entry is the remainder of the header line

  std::vector<Word> words() const {
    std::vector<Word> out;
    for (const auto& l : lines) {
      auto w = split_words(l);
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }
};

std::vector<Section> split_sections(std::string_view text, bool semicolons) {
  std::vector<Section> out;
  for (const auto& line : split_lines(text, semicolons)) {
    std::size_t i = 0;
    while (i < line.text.size() && is_space(line.text[i])) ++i;
    if (i < line.text.size() && line.text[i] == '@') {
      std::size_t j = i;
      while (j < line.text.size() && !is_space(line.text[j])) ++j;
      Section s;
      s.name = std::string(line.text.substr(i + 1, j - i - 1));
      s.span = advance(line.start, i);
      s.lines.push_back({line.text.substr(j), advance(line.start, j)});
      out.push_back(std::move(s));
    } else if (!blank(line)) {
      if (out.empty()) syntax_error("content outside of any section", advance(line.start, i));
      out.back().lines.push_back(line);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bracket terms for structures and rules

enum class Tok { LBracket, RBracket, Arrow, Word };

struct Token {
  Tok kind;
  std::string text;   // word text
  std::string label;  // `]_label` suffix
  SourceSpan span;
};

bool object_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '\'' || c == '@';
}

bool label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> lex_line(const Line& line) {
  std::vector<Token> out;
  const auto& t = line.text;
  std::size_t i = 0;
  while (i < t.size()) {
    const char c = t[i];
    const SourceSpan here = advance(line.start, i);
    if (is_space(c)) {
      ++i;
    } else if (c == '[') {
      out.push_back({Tok::LBracket, {}, {}, here});
      ++i;
    } else if (c == ']') {
      Token tok{Tok::RBracket, {}, {}, here};
      ++i;
      if (i < t.size() && t[i] == '_') {
        std::size_t j = i + 1;
        while (j < t.size() && label_char(t[j])) ++j;
        if (j == i + 1) syntax_error("expected a label after ']_'", advance(line.start, i));
        tok.label = std::string(t.substr(i + 1, j - i - 1));
        i = j;
      }
      out.push_back(std::move(tok));
    } else if (c == '-' && i + 1 < t.size() && t[i + 1] == '>') {
      out.push_back({Tok::Arrow, {}, {}, here});
      i += 2;
    } else if (object_char(c)) {
      std::size_t j = i;
      while (j < t.size() && object_char(t[j])) ++j;
      std::string word(t.substr(i, j - i));
      if (!is_object_token(word)) syntax_error("malformed token '" + word + "'", here);
      out.push_back({Tok::Word, std::move(word), {}, here});
      i = j;
    } else {
      syntax_error(std::string("unexpected character '") + c + "'", here);
    }
  }
  return out;
}

struct Term {
  enum Kind { Word, Arrow, Membrane } kind = Word;
  std::string text;
  std::string label;
  bool has_label = false;
  std::vector<Term> items;
  SourceSpan span;
};

std::vector<Term> parse_terms(const std::vector<Token>& toks, std::size_t& pos, bool nested,
                              const SourceSpan& open_span) {
  std::vector<Term> out;
  while (pos < toks.size()) {
    const Token& tok = toks[pos];
    switch (tok.kind) {
      case Tok::Word:
        out.push_back({Term::Word, tok.text, {}, false, {}, tok.span});
        ++pos;
        break;
      case Tok::Arrow:
        out.push_back({Term::Arrow, "->", {}, false, {}, tok.span});
        ++pos;
        break;
      case Tok::LBracket: {
        ++pos;
        Term m{Term::Membrane, {}, {}, false, {}, tok.span};
        m.items = parse_terms(toks, pos, true, tok.span);
        const Token& close = toks[pos - 1];
        m.has_label = !close.label.empty();
        m.label = close.label;
        out.push_back(std::move(m));
        break;
      }
      case Tok::RBracket:
        if (!nested) syntax_error("unbalanced ']'", tok.span);
        ++pos;
        return out;
    }
  }
  if (nested) syntax_error("unclosed '['", open_span);
  return out;
}

std::vector<Term> parse_line_terms(const Line& line) {
  auto toks = lex_line(line);
  std::size_t pos = 0;
  return parse_terms(toks, pos, false, line.start);
}

// ---------------------------------------------------------------------------
// Structure

MembraneNode structure_from_term(const Term& t) {
  if (t.kind != Term::Membrane) syntax_error("expected '[' in structure", t.span);
  if (t.has_label) syntax_error("structure membranes are written [label ...]", t.span);
  if (t.items.empty() || t.items.front().kind != Term::Word) {
    syntax_error("membrane is missing its label", t.span);
  }
  const auto& label = t.items.front();
  if (!is_label_token(label.text)) syntax_error("malformed label '" + label.text + "'", label.span);
  MembraneNode node{LabelId{label.text}, {}};
  for (std::size_t i = 1; i < t.items.size(); ++i) {
    node.children.push_back(structure_from_term(t.items[i]));
  }
  return node;
}

MembraneNode parse_structure(const Section& s) {
  std::vector<Term> terms;
  // The structure may span lines: lex everything, then parse once.
  std::vector<Token> toks;
  for (const auto& line : s.lines) {
    auto t = lex_line(line);
    toks.insert(toks.end(), t.begin(), t.end());
  }
  std::size_t pos = 0;
  terms = parse_terms(toks, pos, false, s.span);
  if (terms.size() != 1) syntax_error("structure must be a single bracket expression", s.span);
  return structure_from_term(terms.front());
}

// ---------------------------------------------------------------------------
// Rules

bool is_word(const Term& t) { return t.kind == Term::Word; }

bool is_membrane(const Term& t, std::size_t n_items) {
  return t.kind == Term::Membrane && t.items.size() == n_items;
}

const std::string& require_label(const Term& m) {
  if (!m.has_label) syntax_error("membrane needs a ']_label' suffix", m.span);
  return m.label;
}

void same_label(const Term& m, const std::string& h) {
  if (require_label(m) != h) {
    syntax_error("label mismatch: expected '" + h + "', found '" + m.label + "'", m.span);
  }
}

/// `[h1]` or `[]_h1` inside a non-elementary division.
std::optional<std::string> child_marker(const Term& t) {
  if (t.kind != Term::Membrane) return std::nullopt;
  if (t.has_label && t.items.empty()) return t.label;
  if (!t.has_label && t.items.size() == 1 && is_word(t.items[0]) &&
      is_label_token(t.items[0].text)) {
    return t.items[0].text;
  }
  return std::nullopt;
}

Rule parse_rule(const Line& line) {
  auto terms = parse_line_terms(line);
  const SourceSpan at = terms.empty() ? line.start : terms.front().span;
  auto fail = [&]() -> Rule { syntax_error("unrecognized rule form", at); };

  // (a) [a -> u]_h
  if (terms.size() == 1 && terms[0].kind == Term::Membrane && terms[0].items.size() >= 2 &&
      terms[0].items[1].kind == Term::Arrow) {
    const auto& m = terms[0];
    if (!is_word(m.items[0])) fail();
    Multiset rhs;
    for (std::size_t i = 2; i < m.items.size(); ++i) {
      if (!is_word(m.items[i])) syntax_error("evolution products must be objects", m.items[i].span);
      rhs.add(ObjectId{m.items[i].text});
    }
    return Rule::evolve(LabelId{require_label(m)}, ObjectId{m.items[0].text}, std::move(rhs));
  }

  auto arrow = std::find_if(terms.begin(), terms.end(),
                            [](const Term& t) { return t.kind == Term::Arrow; });
  if (arrow == terms.end()) fail();
  std::vector<Term> lhs(terms.begin(), arrow);
  std::vector<Term> rhs(arrow + 1, terms.end());

  // (b) a []_h -> [b]_h
  if (lhs.size() == 2 && is_word(lhs[0]) && is_membrane(lhs[1], 0)) {
    const auto& h = require_label(lhs[1]);
    if (rhs.size() != 1 || !is_membrane(rhs[0], 1) || !is_word(rhs[0].items[0])) fail();
    same_label(rhs[0], h);
    return Rule::send_in(LabelId{h}, ObjectId{lhs[0].text}, ObjectId{rhs[0].items[0].text});
  }

  if (lhs.size() != 1 || lhs[0].kind != Term::Membrane || lhs[0].items.empty() ||
      !is_word(lhs[0].items[0])) {
    fail();
  }
  const auto& h = require_label(lhs[0]);
  const ObjectId a{lhs[0].items[0].text};

  if (lhs[0].items.size() == 1) {
    // (c) [a]_h -> []_h b
    if (rhs.size() == 2 && is_membrane(rhs[0], 0) && is_word(rhs[1])) {
      same_label(rhs[0], h);
      return Rule::send_out(LabelId{h}, a, ObjectId{rhs[1].text});
    }
    // (d) [a]_h -> b
    if (rhs.size() == 1 && is_word(rhs[0])) {
      return Rule::dissolve(LabelId{h}, a, ObjectId{rhs[0].text});
    }
    // (e) [a]_h -> [b]_h [c]_h
    if (rhs.size() == 2 && is_membrane(rhs[0], 1) && is_membrane(rhs[1], 1) &&
        is_word(rhs[0].items[0]) && is_word(rhs[1].items[0])) {
      same_label(rhs[0], h);
      same_label(rhs[1], h);
      return Rule::divide_elem(LabelId{h}, a, ObjectId{rhs[0].items[0].text},
                               ObjectId{rhs[1].items[0].text});
    }
    fail();
  }

  // (f) [a [h1][h2][h3]]_h0 -> [b [h1][h3]]_h0 [c [h2][h3]]_h0
  if (lhs[0].items.size() != 4) fail();
  std::array<LabelId, 3> kids;
  for (std::size_t i = 0; i < 3; ++i) {
    auto marker = child_marker(lhs[0].items[i + 1]);
    if (!marker) syntax_error("expected a child membrane marker", lhs[0].items[i + 1].span);
    kids[i] = LabelId{*marker};
  }
  if (rhs.size() != 2 || !is_membrane(rhs[0], 3) || !is_membrane(rhs[1], 3) ||
      !is_word(rhs[0].items[0]) || !is_word(rhs[1].items[0])) {
    fail();
  }
  same_label(rhs[0], h);
  same_label(rhs[1], h);
  auto expect_child = [&](const Term& t, const LabelId& want) {
    auto marker = child_marker(t);
    if (!marker || *marker != want.str()) {
      syntax_error("expected child membrane '" + want.str() + "'", t.span);
    }
  };
  expect_child(rhs[0].items[1], kids[0]);
  expect_child(rhs[0].items[2], kids[2]);
  expect_child(rhs[1].items[1], kids[1]);
  expect_child(rhs[1].items[2], kids[2]);
  return Rule::divide_non_elem(LabelId{h}, kids, a, ObjectId{rhs[0].items[0].text},
                               ObjectId{rhs[1].items[0].text});
}

// ---------------------------------------------------------------------------

std::string single_word(const Section& s) {
  auto w = s.words();
  if (w.size() != 1) syntax_error("@" + s.name + " takes exactly one name", s.span);
  return w.front().text;
}

struct ParsedSystem {
  MembraneSystem sys;
  std::vector<SourceSpan> rule_spans;
};

ParsedSystem parse_system_impl(std::string_view text) {
  ParsedSystem out;
  MembraneSystem& sys = out.sys;
  bool have_labels = false;
  bool have_structure = false;
  bool have_yes = false;
  bool have_no = false;
  bool have_input = false;

  for (const auto& s : split_sections(text, false)) {
    if (s.name == "objects") {
      for (const auto& w : s.words()) {
        if (!is_object_token(w.text)) syntax_error("malformed object name '" + w.text + "'", w.span);
        if (!sys.alphabet.insert(ObjectId{w.text}).second) {
          syntax_error("duplicate object '" + w.text + "'", w.span);
        }
      }
    } else if (s.name == "labels") {
      have_labels = true;
      for (const auto& w : s.words()) {
        if (!is_label_token(w.text)) syntax_error("malformed label '" + w.text + "'", w.span);
        if (!sys.labels.insert(LabelId{w.text}).second) {
          syntax_error("duplicate label '" + w.text + "'", w.span);
        }
      }
    } else if (s.name == "structure") {
      if (have_structure) syntax_error("duplicate @structure", s.span);
      have_structure = true;
      sys.structure = parse_structure(s);
    } else if (s.name == "contents") {
      auto words = s.words();
      if (words.empty() || words.front().text.empty() || words.front().text.back() != ':') {
        syntax_error("expected '@contents <label>: <objects>'", s.span);
      }
      std::string label = words.front().text.substr(0, words.front().text.size() - 1);
      if (!is_label_token(label)) syntax_error("malformed label '" + label + "'", words.front().span);
      Multiset m;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!is_object_token(words[i].text)) {
          syntax_error("malformed object name '" + words[i].text + "'", words[i].span);
        }
        m.add(ObjectId{words[i].text});
      }
      if (sys.initial_contents.contains(LabelId{label})) {
        syntax_error("duplicate contents for '" + label + "'", s.span);
      }
      if (!m.empty()) sys.initial_contents.emplace(LabelId{label}, std::move(m));
    } else if (s.name == "input") {
      if (have_input) syntax_error("duplicate @input", s.span);
      have_input = true;
      sys.input_label = LabelId{single_word(s)};
    } else if (s.name == "yes") {
      if (have_yes) syntax_error("duplicate @yes", s.span);
      have_yes = true;
      sys.yes = ObjectId{single_word(s)};
    } else if (s.name == "no") {
      if (have_no) syntax_error("duplicate @no", s.span);
      have_no = true;
      sys.no = ObjectId{single_word(s)};
    } else if (s.name == "rules") {
      for (const auto& line : s.lines) {
        if (blank(line)) continue;
        Rule r = parse_rule(line);
        r.index = sys.rules.size();
        sys.rules.push_back(std::move(r));
        out.rule_spans.push_back(line.start);
      }
    } else {
      syntax_error("unknown section '@" + s.name + "'", s.span);
    }
  }
  if (!have_labels) sys.labels = structure_labels(sys);
  sys.labels.insert(env_label());
  return out;
}

std::string quote(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Shared by .dg and s-t instance parsing.
struct GraphSections {
  Digraph graph;
  std::vector<Word> in_words;
  bool has_in = false;
  std::optional<Word> yes, no, s, t;
};

GraphSections parse_graph_sections(std::string_view text, bool stcon) {
  GraphSections out;
  auto sections = split_sections(text, true);
  auto lookup = [&](const Word& w) -> NodeId {
    if (auto id = out.graph.find(w.text)) return *id;
    throw Error(ErrorCode::UndeclaredNode, "node '" + w.text + "' is not declared", w.span);
  };
  // Nodes first, so edges may appear before @nodes in hand-written files.
  for (const auto& s : sections) {
    if (s.name != "nodes") continue;
    for (const auto& w : s.words()) {
      if (!is_object_token(w.text)) syntax_error("malformed node name '" + w.text + "'", w.span);
      if (out.graph.find(w.text)) syntax_error("duplicate node '" + w.text + "'", w.span);
      out.graph.add_node(w.text);
    }
  }
  auto one = [&](const Section& s, std::optional<Word>& slot) {
    if (slot) syntax_error("duplicate @" + s.name, s.span);
    auto w = s.words();
    if (w.size() != 1) syntax_error("@" + s.name + " takes exactly one node", s.span);
    slot = w.front();
  };
  for (const auto& s : sections) {
    if (s.name == "nodes") continue;
    if (s.name == "edges") {
      for (const auto& line : s.lines) {
        auto w = split_words(line);
        if (w.size() % 2 != 0) syntax_error("edge lines hold 'source target' pairs", line.start);
        for (std::size_t i = 0; i < w.size(); i += 2) {
          out.graph.add_edge(lookup(w[i]), lookup(w[i + 1]));
        }
      }
    } else if (!stcon && s.name == "in") {
      out.has_in = true;
      for (const auto& w : s.words()) out.in_words.push_back(w);
    } else if (!stcon && s.name == "yes") {
      one(s, out.yes);
    } else if (!stcon && s.name == "no") {
      one(s, out.no);
    } else if (stcon && s.name == "s") {
      one(s, out.s);
    } else if (stcon && s.name == "t") {
      one(s, out.t);
    } else {
      syntax_error("unknown section '@" + s.name + "'", s.span);
    }
  }
  return out;
}

}  // namespace

MembraneSystem parse_system_unchecked(std::string_view text) {
  return parse_system_impl(text).sys;
}

MembraneSystem parse_system(std::string_view text) {
  auto parsed = parse_system_impl(text);
  auto report = validate_system(parsed.sys);
  if (report.ok()) return std::move(parsed.sys);

  std::optional<SourceSpan> span;
  std::string message;
  for (const auto& e : report.errors) {
    std::string where = e.location;
    if (where.rfind("rule ", 0) == 0) {
      const std::size_t idx = std::stoul(where.substr(5)) - 1;
      if (idx < parsed.rule_spans.size()) {
        where += " (line " + std::to_string(parsed.rule_spans[idx].line) + ")";
        if (!span) span = parsed.rule_spans[idx];
      }
    }
    if (!message.empty()) message += "; ";
    message += e.code + " in " + where + ": " + e.message;
  }
  throw Error(ErrorCode::InvalidSystem, message, span);
}

std::string format_multiset(const Multiset& m) {
  std::string out;
  for (const auto& [o, n] : m) {
    for (Multiset::Count i = 0; i < n; ++i) {
      if (!out.empty()) out += ' ';
      out += o.str();
    }
  }
  return out;
}

std::string format_multiset_compact(const Multiset& m) {
  std::string out;
  for (const auto& [o, n] : m) {
    if (!out.empty()) out += ' ';
    out += o.str();
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

std::string format_rule(const Rule& r) {
  const std::string& h = r.label.str();
  switch (r.kind) {
    case RuleKind::Evolve: {
      std::string u = format_multiset(r.rhs);
      return "[" + r.lhs.str() + " ->" + (u.empty() ? "" : " " + u) + "]_" + h;
    }
    case RuleKind::SendIn:
      return r.lhs.str() + " []_" + h + " -> [" + r.first.str() + "]_" + h;
    case RuleKind::SendOut:
      return "[" + r.lhs.str() + "]_" + h + " -> []_" + h + " " + r.first.str();
    case RuleKind::Dissolve:
      return "[" + r.lhs.str() + "]_" + h + " -> " + r.first.str();
    case RuleKind::DivideElem:
      return "[" + r.lhs.str() + "]_" + h + " -> [" + r.first.str() + "]_" + h + " [" +
             r.second.str() + "]_" + h;
    case RuleKind::DivideNonElem: {
      const auto& k = r.child_labels;
      return "[" + r.lhs.str() + " [" + k[0].str() + "][" + k[1].str() + "][" + k[2].str() +
             "]]_" + h + " -> [" + r.first.str() + " [" + k[0].str() + "][" + k[2].str() +
             "]]_" + h + " [" + r.second.str() + " [" + k[1].str() + "][" + k[2].str() + "]]_" +
             h;
    }
  }
  return {};
}

std::string format_structure(const MembraneNode& node) {
  std::string out = "[" + node.label.str();
  for (const auto& c : node.children) out += " " + format_structure(c);
  return out + "]";
}

std::string serialize_system(const MembraneSystem& sys) {
  std::ostringstream out;
  out << "@objects";
  for (const auto& o : sys.alphabet) out << ' ' << o.str();
  out << "\n@labels";
  for (const auto& h : sys.labels) out << ' ' << h.str();
  out << "\n@structure " << format_structure(sys.structure) << '\n';
  out << "@yes " << sys.yes.str() << "\n@no " << sys.no.str() << '\n';
  if (sys.input_label) out << "@input " << sys.input_label->str() << '\n';
  for (const auto& [h, m] : sys.initial_contents) {
    if (!m.empty()) out << "@contents " << h.str() << ": " << format_multiset(m) << '\n';
  }
  out << "@rules\n";
  for (const auto& r : sys.rules) out << format_rule(r) << '\n';
  return out.str();
}

DependencyGraph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  auto parsed = parse_graph_sections(text, false);
  DependencyGraph g;
  auto distinguished = [&](const std::optional<Word>& w, const char* fallback) -> NodeId {
    const std::string name = w ? w->text : fallback;
    if (auto id = parsed.graph.find(name)) return *id;
    throw Error(ErrorCode::MissingDistinguished,
                "distinguished node '" + name + "' is not declared",
                w ? std::optional<SourceSpan>(w->span) : std::nullopt);
  };
  g.yes_node = distinguished(parsed.yes, "yes");
  g.no_node = distinguished(parsed.no, "no");
  if (g.yes_node == g.no_node) {
    throw Error(ErrorCode::MissingDistinguished, "yes and no must be different nodes");
  }
  for (const auto& w : parsed.in_words) {
    auto id = parsed.graph.find(w.text);
    if (!id) throw Error(ErrorCode::UndeclaredNode, "node '" + w.text + "' is not declared", w.span);
    g.in_set.insert(*id);
  }
  if (warnings != nullptr) {
    if (!parsed.has_in) {
      warnings->push_back("no @in section; the in-set is empty");
    } else if (g.in_set.empty()) {
      warnings->push_back("the in-set is empty");
    }
  }
  g.graph = std::move(parsed.graph);
  return g;
}

std::string serialize_graph(const DependencyGraph& g) {
  const auto& d = g.graph;
  std::ostringstream out;
  out << "@nodes\n";
  for (NodeId id : d.ids_by_name()) out << d.name(id) << '\n';
  out << "@yes " << d.name(g.yes_node) << "\n@no " << d.name(g.no_node) << "\n@in\n";
  std::vector<std::string> in;
  for (NodeId id : g.in_set) in.push_back(d.name(id));
  std::sort(in.begin(), in.end());
  for (const auto& n : in) out << n << '\n';
  out << "@edges\n";
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : d.edges()) edges.emplace_back(d.name(u), d.name(v));
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

StconInstance parse_stcon(std::string_view text) {
  auto parsed = parse_graph_sections(text, true);
  auto endpoint = [&](const std::optional<Word>& w, const char* which) -> NodeId {
    if (!w) throw Error(ErrorCode::MissingDistinguished, std::string("missing @") + which);
    if (auto id = parsed.graph.find(w->text)) return *id;
    throw Error(ErrorCode::UndeclaredNode, "node '" + w->text + "' is not declared", w->span);
  };
  StconInstance inst;
  inst.s = endpoint(parsed.s, "s");
  inst.t = endpoint(parsed.t, "t");
  inst.graph = std::move(parsed.graph);
  return inst;
}

std::string serialize_stcon(const StconInstance& inst) {
  const auto& d = inst.graph;
  std::ostringstream out;
  out << "@nodes\n";
  for (NodeId id : d.ids_by_name()) out << d.name(id) << '\n';
  out << "@s " << d.name(inst.s) << "\n@t " << d.name(inst.t) << "\n@edges\n";
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : d.edges()) edges.emplace_back(d.name(u), d.name(v));
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::string emit_dot(const DependencyGraph& g, const DotOptions& options) {
  const auto& d = g.graph;
  std::vector<bool> touched(d.node_count(), false);
  for (auto [u, v] : d.edges()) touched[u] = touched[v] = true;

  std::ostringstream out;
  out << "digraph dependency_graph {\n  rankdir=LR;\n";
  for (NodeId id : d.ids_by_name()) {
    const bool in = g.in_set.contains(id);
    const bool distinguished = id == g.yes_node || id == g.no_node;
    if (options.prune && !touched[id] && !in && !distinguished) continue;
    out << "  " << quote(d.name(id));
    if (id == g.yes_node) {
      out << " [shape=doublecircle, peripheries=2, color=darkgreen]";
    } else if (id == g.no_node) {
      out << " [shape=doublecircle, peripheries=2, color=red]";
    } else if (in) {
      out << " [shape=box, peripheries=2]";
    }
    out << ";\n";
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : d.edges()) edges.emplace_back(d.name(u), d.name(v));
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) out << "  " << quote(u) << " -> " << quote(v) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace memdep
