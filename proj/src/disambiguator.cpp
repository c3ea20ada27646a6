#include "evomt/disambiguator.hpp"

#include <algorithm>
#include <optional>

#include "evomt/error.hpp"

namespace evomt {

namespace {

double ppmi_or_zero(const CooccurrenceModel& model, std::string_view x, std::string_view y) {
  if (!model.contains(x) || !model.contains(y)) return 0.0;
  return ppmi(model, x, y);
}

}  // namespace

double score_gloss(const CooccurrenceModel& model, std::string_view gloss,
                   std::span<const std::vector<std::string>> context) {
  double total = 0.0;
  for (const auto& position : context) {
    double best = 0.0;
    for (const auto& h : position) best = std::max(best, ppmi_or_zero(model, gloss, h));
    total += best;
  }
  return total;
}

std::vector<ResolvedToken> disambiguate_sentence(const CooccurrenceModel& model,
                                                 const BilingualLexicon& lex,
                                                 std::span<const Token> tokens) {
  std::vector<const std::vector<GlossEntry>*> senses(tokens.size(), nullptr);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::Word) senses[i] = lex.find(tokens[i].text);
  }

  // Candidate gloss sets per position; collapsed to the choice once made.
  std::vector<std::vector<std::string>> candidates(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!senses[i]) continue;
    for (const auto& e : *senses[i]) candidates[i].push_back(e.gloss);
  }

  std::vector<ResolvedToken> out;
  out.reserve(tokens.size());
  std::vector<std::vector<std::string>> context;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!senses[i]) {
      out.emplace_back(Passthrough{tokens[i]});
      continue;
    }
    context.clear();
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      if (j != i && senses[j]) context.push_back(candidates[j]);
    }

    const auto& entries = *senses[i];
    std::vector<double> scores;
    scores.reserve(entries.size());
    for (const auto& e : entries) scores.push_back(score_gloss(model, e.gloss, context));
    // max_element keeps the first of equal maxima, i.e. lexicon order.
    const auto best = static_cast<std::size_t>(
        std::max_element(scores.begin(), scores.end()) - scores.begin());

    SenseChoice choice{tokens[i], entries[best], scores[best], {}};
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k != best) choice.alternatives.emplace_back(entries[k], scores[k]);
    }
    candidates[i] = {entries[best].gloss};
    out.emplace_back(std::move(choice));
  }
  return out;
}

}  // namespace evomt
