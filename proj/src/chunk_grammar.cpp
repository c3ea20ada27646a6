#include "evomt/chunk_grammar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "evomt/error.hpp"
#include "evomt/tagset.hpp"
#include "evomt/unicode.hpp"

namespace evomt {

bool SymbolMatcher::matches(const Symbol& symbol) const {
  if (tag_prefix) return !symbol.is_label && symbol.name.starts_with(*tag_prefix);
  return std::find(literals.begin(), literals.end(), symbol) != literals.end();
}

// ---------------------------------------------------------------------------
// Automaton
// ---------------------------------------------------------------------------

PatternAutomaton::PatternAutomaton(const std::vector<Atom>& pattern) {
  for (const auto& atom : pattern) {
    switch (atom.quantifier) {
      case Quantifier::One:
        states_.push_back({atom.matcher, Step::One});
        break;
      case Quantifier::Optional:
        states_.push_back({atom.matcher, Step::Optional});
        break;
      case Quantifier::Star:
        states_.push_back({atom.matcher, Step::Star});
        break;
      case Quantifier::Plus:
        states_.push_back({atom.matcher, Step::One});
        states_.push_back({atom.matcher, Step::Star});
        break;
    }
  }
}

void PatternAutomaton::close(std::vector<char>& set) const {
  // Epsilon edges only go forward, so one ascending pass suffices.
  for (std::size_t s = 0; s < states_.size(); ++s) {
    if (set[s] && states_[s].step != Step::One) set[s + 1] = 1;
  }
}

std::size_t PatternAutomaton::longest_match(std::span<const Symbol> symbols) const {
  const std::size_t accept = states_.size();
  std::vector<char> current(accept + 1, 0);
  std::vector<char> next(accept + 1, 0);
  current[0] = 1;
  close(current);

  std::size_t best = 0;
  for (std::size_t pos = 0; pos < symbols.size(); ++pos) {
    std::fill(next.begin(), next.end(), 0);
    bool alive = false;
    for (std::size_t s = 0; s < accept; ++s) {
      if (!current[s] || !states_[s].matcher.matches(symbols[pos])) continue;
      next[states_[s].step == Step::Star ? s : s + 1] = 1;
      alive = true;
    }
    if (!alive) break;
    close(next);
    current.swap(next);
    if (current[accept]) best = pos + 1;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Grammar
// ---------------------------------------------------------------------------

ChunkGrammar::ChunkGrammar(std::vector<ChunkRule> rules) : rules_(std::move(rules)) {
  std::set<std::string, std::less<>> defined;
  for (const auto& rule : rules_) {
    if (rule.pattern.empty()) throw std::invalid_argument("rule '" + rule.name + "' has no atoms");
    for (const auto& atom : rule.pattern) {
      for (const auto& lit : atom.matcher.literals) {
        if (lit.is_label && !defined.contains(lit.name)) throw ForwardReference(lit.name);
      }
    }
    if (!defined.insert(rule.name).second) throw DuplicateRule(rule.name);
    automata_.emplace_back(rule.pattern);
  }
}

namespace {

class GrammarParser {
 public:
  explicit GrammarParser(std::string_view text) : cps_(decode_utf8(text)) {
    std::size_t line = 1, column = 1;
    for (const auto& cp : cps_) {
      positions_.push_back({line, column});
      if (cp.value == U'\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    positions_.push_back({line, column});
  }

  std::vector<ChunkRule> parse() {
    std::vector<ChunkRule> rules;
    skip_space();
    while (!at_end()) {
      rules.push_back(parse_rule(rules));
      skip_space();
    }
    return rules;
  }

 private:
  struct Position {
    std::size_t line;
    std::size_t column;
  };

  bool at_end() const { return pos_ >= cps_.size(); }
  char32_t peek() const { return at_end() ? 0 : cps_[pos_].value; }

  [[noreturn]] void fail(const std::string& expected) const {
    const auto& p = positions_[std::min(pos_, cps_.size())];
    throw GrammarSyntaxError(p.line, p.column, expected);
  }

  void skip_space() {
    while (!at_end() && classify_code_point(peek()) == CharClass::Space) ++pos_;
  }

  void expect(char32_t c, const char* what) {
    if (peek() != c) fail(what);
    ++pos_;
  }

  static bool is_ident_char(char32_t c) {
    return (c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z') || (c >= U'0' && c <= U'9') ||
           c == U'_';
  }

  std::string identifier(const char* what) {
    if (!is_ident_char(peek())) fail(what);
    std::string out;
    while (is_ident_char(peek())) out += static_cast<char>(cps_[pos_++].value);
    return out;
  }

  ChunkRule parse_rule(const std::vector<ChunkRule>& earlier) {
    const std::size_t name_pos = pos_;
    ChunkRule rule;
    rule.name = identifier("rule name");
    if (is_tag(rule.name)) {
      pos_ = name_pos;
      fail("rule name distinct from POS tags");
    }
    for (const auto& r : earlier) {
      if (r.name == rule.name) throw DuplicateRule(rule.name);
    }
    skip_space();
    expect(U':', "':'");
    skip_space();
    expect(U'{', "'{'");
    skip_space();
    if (peek() != U'<') fail("'<'");
    while (peek() == U'<') {
      rule.pattern.push_back(parse_atom(earlier));
      skip_space();
    }
    expect(U'}', "'<' or '}'");
    return rule;
  }

  Atom parse_atom(const std::vector<ChunkRule>& earlier) {
    Atom atom;
    expect(U'<', "'<'");
    for (;;) {
      const std::size_t name_pos = pos_;
      std::string name = identifier("tag or chunk label");
      if (peek() == U'.') {
        ++pos_;
        expect(U'*', "'*' after '.'");
        if (!atom.matcher.literals.empty() || peek() == U'|') fail("'>' (wildcards cannot be alternated)");
        const bool matches_some = std::any_of(kTagset.begin(), kTagset.end(),
                                              [&](std::string_view t) { return t.starts_with(name); });
        if (!matches_some) {
          pos_ = name_pos;
          fail("tag prefix matching at least one POS tag");
        }
        atom.matcher.tag_prefix = std::move(name);
        break;
      }
      atom.matcher.literals.push_back(resolve(std::move(name), earlier));
      if (peek() != U'|') break;
      ++pos_;
    }
    expect(U'>', "'>'");

    // Tolerate a doubled closing bracket split by whitespace.
    const std::size_t after = pos_;
    skip_space();
    if (peek() == U'>') {
      ++pos_;
    } else {
      pos_ = after;
    }

    skip_space();
    switch (peek()) {
      case U'?':
        atom.quantifier = Quantifier::Optional;
        ++pos_;
        break;
      case U'*':
        atom.quantifier = Quantifier::Star;
        ++pos_;
        break;
      case U'+':
        atom.quantifier = Quantifier::Plus;
        ++pos_;
        break;
      default:
        break;
    }
    return atom;
  }

  static Symbol resolve(std::string name, const std::vector<ChunkRule>& earlier) {
    for (const auto& r : earlier) {
      if (r.name == name) return {std::move(name), true};
    }
    if (is_tag(name)) return {std::move(name), false};
    throw ForwardReference(name);
  }

  std::vector<CodePoint> cps_;
  std::vector<Position> positions_;
  std::size_t pos_ = 0;
};

void flatten_into(const ChunkNode& node, std::vector<TaggedToken>& out) {
  out.insert(out.end(), node.tokens.begin(), node.tokens.end());
}

}  // namespace

ChunkGrammar parse_grammar(std::string_view text) {
  return ChunkGrammar(GrammarParser(text).parse());
}

std::string unparse_grammar(const ChunkGrammar& grammar) {
  std::string out;
  for (const auto& rule : grammar.rules()) {
    out += rule.name;
    out += ": {";
    for (const auto& atom : rule.pattern) {
      out += '<';
      if (atom.matcher.tag_prefix) {
        out += *atom.matcher.tag_prefix;
        out += ".*";
      } else {
        for (std::size_t i = 0; i < atom.matcher.literals.size(); ++i) {
          if (i) out += '|';
          out += atom.matcher.literals[i].name;
        }
      }
      out += '>';
      switch (atom.quantifier) {
        case Quantifier::One:
          break;
        case Quantifier::Optional:
          out += '?';
          break;
        case Quantifier::Star:
          out += '*';
          break;
        case Quantifier::Plus:
          out += '+';
          break;
      }
    }
    out += "}\n";
  }
  return out;
}

std::string_view default_grammar_source() {
  return "NP: {<PRP>?<JJ.*>*<NN.*>+}\n"
         "CP: {<JJR|JJS>}\n"
         "VERB: {<VB.*>}\n"
         "THAN: {<IN>}\n"
         "COMP: {<DT>?<NP><RB>?<VERB><DT>?<CP><THAN><DT>?<NP>}\n";
}

// ---------------------------------------------------------------------------
// Chunking
// ---------------------------------------------------------------------------

Symbol ChunkNode::symbol() const {
  if (is_chunk()) return {label, true};
  return {tokens.front().tag, false};
}

std::vector<TaggedToken> ChunkSequence::tokens() const {
  std::vector<TaggedToken> out;
  for (const auto& item : items) flatten_into(item, out);
  return out;
}

ChunkSequence chunk(const ChunkGrammar& grammar, std::span<const TaggedToken> tagged) {
  std::vector<ChunkNode> items;
  items.reserve(tagged.size());
  for (const auto& t : tagged) items.push_back({{}, {t}, {}});

  std::vector<Symbol> symbols;
  for (std::size_t r = 0; r < grammar.rules().size(); ++r) {
    symbols.clear();
    for (const auto& item : items) symbols.push_back(item.symbol());

    const auto& automaton = grammar.automaton(r);
    std::vector<ChunkNode> next;
    next.reserve(items.size());
    std::size_t i = 0;
    while (i < items.size()) {
      const std::size_t len = automaton.longest_match(std::span(symbols).subspan(i));
      if (len == 0) {
        next.push_back(std::move(items[i]));
        ++i;
        continue;
      }
      ChunkNode node{grammar.rules()[r].name, {}, {}};
      for (std::size_t k = i; k < i + len; ++k) {
        flatten_into(items[k], node.tokens);
        node.children.push_back(std::move(items[k]));
      }
      next.push_back(std::move(node));
      i += len;
    }
    items = std::move(next);
  }
  return ChunkSequence{std::move(items)};
}

std::string format_chunk(const ChunkNode& node) {
  if (!node.is_chunk()) return node.tokens.front().text + "/" + node.tokens.front().tag;
  std::string out = "(" + node.label;
  for (const auto& child : node.children) {
    out += ' ';
    out += format_chunk(child);
  }
  out += ')';
  return out;
}

}  // namespace evomt
