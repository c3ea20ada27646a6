#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "evomt/lexicon.hpp"
#include "evomt/ppmi_model.hpp"
#include "evomt/tokenizer.hpp"

namespace evomt {

struct SenseChoice {
  Token source;
  GlossEntry chosen;
  double score = 0.0;
  // Every other sense of the source word with its score, in lexicon order.
  std::vector<std::pair<GlossEntry, double>> alternatives;
};

using ResolvedToken = std::variant<SenseChoice, Passthrough>;

// Sum over context positions of the best PPMI between `gloss` and any gloss at
// that position. Words unknown to the model contribute 0.
double score_gloss(const CooccurrenceModel& model, std::string_view gloss,
                   std::span<const std::vector<std::string>> context);

// Greedy left-to-right sense selection. An ambiguous word at position i is
// scored against the chosen glosses of earlier positions and the full sense
// sets of later ones; ties keep the earlier sense in lexicon order.
// Passthrough tokens take no part in the context.
std::vector<ResolvedToken> disambiguate_sentence(const CooccurrenceModel& model,
                                                 const BilingualLexicon& lex,
                                                 std::span<const Token> tokens);

}  // namespace evomt
