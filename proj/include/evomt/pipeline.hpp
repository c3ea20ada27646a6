#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evomt/chunk_grammar.hpp"
#include "evomt/disambiguator.hpp"
#include "evomt/ea_reorder.hpp"
#include "evomt/lexicon.hpp"
#include "evomt/pos_tagger.hpp"
#include "evomt/ppmi_model.hpp"
#include "evomt/tokenizer.hpp"

namespace evomt {

struct Resources {
  BilingualLexicon lexicon;
  CooccurrenceModel model;
  TagLexicon taglex;
  ChunkGrammar grammar = parse_grammar(default_grammar_source());
};

struct TranslationResult {
  std::vector<Token> source_tokens;
  std::vector<ResolvedToken> glossed;
  std::vector<TaggedToken> direct;  // source (SOV) order
  DerivedTarget target;
  std::optional<EvolutionReport> report;  // nullopt when the search was skipped
  std::vector<TaggedToken> final;
  std::string rendered;
};

// Token texts joined by single spaces.
std::string render(std::span<const TaggedToken> tokens);

// Tokenize, choose senses, substitute glosses, tag, derive the SVO target and
// reorder. Sentences without a verb skip the search and keep source order.
TranslationResult translate_sentence(const Resources& resources, const EaConfig& config,
                                     std::string_view sentence);

// Splits into sentences and translates each; `jobs` > 1 spreads sentences
// over worker threads. Results follow input order.
std::vector<TranslationResult> translate_text(const Resources& resources, const EaConfig& config,
                                              std::string_view text, std::size_t jobs = 1);

}  // namespace evomt
