#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evomt/pos_tagger.hpp"

namespace evomt {

// A symbol in the sequence a rule scans: a POS tag or the label of a chunk
// produced by an earlier rule.
struct Symbol {
  std::string name;
  bool is_label = false;

  bool operator==(const Symbol&) const = default;
};

// One of three atom forms: a literal (`NN`, `NP`), an alternation of literals
// (`JJR|JJS`), or a tag-prefix wildcard (`JJ.*`, matches tags only).
struct SymbolMatcher {
  std::vector<Symbol> literals;
  std::optional<std::string> tag_prefix;

  bool matches(const Symbol& symbol) const;
  bool operator==(const SymbolMatcher&) const = default;
};

enum class Quantifier { One, Optional, Star, Plus };

struct Atom {
  SymbolMatcher matcher;
  Quantifier quantifier = Quantifier::One;

  bool operator==(const Atom&) const = default;
};

struct ChunkRule {
  std::string name;
  std::vector<Atom> pattern;

  bool operator==(const ChunkRule&) const = default;
};

// Nondeterministic automaton for one rule's pattern, simulated over sets of
// states. Each state is a position between atoms.
class PatternAutomaton {
 public:
  explicit PatternAutomaton(const std::vector<Atom>& pattern);

  // Length of the longest non-empty prefix of `symbols` accepted by the
  // pattern, or 0 when there is none.
  std::size_t longest_match(std::span<const Symbol> symbols) const;

 private:
  enum class Step { One, Optional, Star };
  struct State {
    SymbolMatcher matcher;
    Step step;
  };

  void close(std::vector<char>& set) const;

  std::vector<State> states_;
};

class ChunkGrammar {
 public:
  ChunkGrammar() = default;
  // Throws DuplicateRule, ForwardReference or std::invalid_argument for an
  // empty pattern.
  explicit ChunkGrammar(std::vector<ChunkRule> rules);

  const std::vector<ChunkRule>& rules() const noexcept { return rules_; }
  const PatternAutomaton& automaton(std::size_t rule) const { return automata_.at(rule); }

  bool operator==(const ChunkGrammar& other) const { return rules_ == other.rules_; }

 private:
  std::vector<ChunkRule> rules_;
  std::vector<PatternAutomaton> automata_;
};

// Rules are `NAME: {<ATOM>...}` blocks applied in file order. Quantifiers
// `?`, `*`, `+` follow an atom; whitespace between tokens is ignored. A bare
// name refers to an earlier rule's label when one exists, otherwise to a tag.
// A second `>` directly after an atom (as left by line-wrapping `<DT>>?`) is
// accepted and ignored.
ChunkGrammar parse_grammar(std::string_view text);

// One rule per line in canonical form; parse_grammar reads it back unchanged.
std::string unparse_grammar(const ChunkGrammar& grammar);

// NP, CP, VERB, THAN and COMP rules for comparative and simple clauses.
std::string_view default_grammar_source();

// A leaf holds exactly one token and no label. A chunk holds its label, the
// tokens it covers and the items it was built from.
struct ChunkNode {
  std::string label;
  std::vector<TaggedToken> tokens;
  std::vector<ChunkNode> children;

  bool is_chunk() const noexcept { return !label.empty(); }
  Symbol symbol() const;
  bool operator==(const ChunkNode&) const = default;
};

struct ChunkSequence {
  std::vector<ChunkNode> items;

  std::vector<TaggedToken> tokens() const;
  bool operator==(const ChunkSequence&) const = default;
};

// Cascaded chunking: each rule scans the current item sequence left to right
// and replaces the longest match at each start with a chunk, then resumes
// after it.
ChunkSequence chunk(const ChunkGrammar& grammar, std::span<const TaggedToken> tagged);

// `word/TAG` for leaves, `(LABEL child ...)` for chunks.
std::string format_chunk(const ChunkNode& node);

}  // namespace evomt
