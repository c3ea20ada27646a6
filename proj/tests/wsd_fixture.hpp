#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "evomt/disambiguator.hpp"
#include "evomt/tokenizer.hpp"
#include "evomt/unicode.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace testing {

inline std::vector<std::string> wsd_sentences() {
  std::vector<std::string> out;
  std::istringstream in(slurp(data_path("wsd_sentences.txt")));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

struct SenseComparison {
  std::vector<std::string> greedy;
  std::vector<std::string> exhaustive;
};

// Greedy choices from the library next to the exhaustive total-PPMI optimum.
inline SenseComparison compare_senses(const evomt::CooccurrenceModel& model, const oracle::Counts& counts,
                                      const evomt::BilingualLexicon& lex, const std::string& sentence) {
  SenseComparison cmp;
  const auto tokens = evomt::tokenize(sentence);
  for (const auto& r : evomt::disambiguate_sentence(model, lex, tokens)) {
    if (const auto* c = std::get_if<evomt::SenseChoice>(&r)) cmp.greedy.push_back(c->chosen.gloss);
  }

  std::vector<std::vector<std::string>> senses;
  for (const auto& t : tokens) {
    if (const auto* e = lex.find(t.text)) {
      senses.emplace_back();
      for (const auto& g : *e) senses.back().push_back(g.gloss);
    }
  }
  const auto best = oracle::best_sense_combination(senses, [&](const std::string& x, const std::string& y) {
    return oracle::ppmi(counts, evomt::to_lower(x), evomt::to_lower(y));
  });
  for (std::size_t i = 0; i < senses.size(); ++i) cmp.exhaustive.push_back(senses[i][best[i]]);
  return cmp;
}

}  // namespace testing
