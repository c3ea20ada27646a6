#pragma once

#include "evomt/pipeline.hpp"
#include "test_support.hpp"

namespace testing {

// Lexicon, model, tag lexicon and grammar shipped under data/.
inline evomt::Resources fixture_resources() {
  evomt::Resources res;
  res.lexicon = evomt::load_lexicon(data_path("lexicon.tsv"));
  res.model = evomt::load_model(data_path("model.ppmi"));
  res.taglex = evomt::load_tag_lexicon(data_path("taglex.tsv"));
  res.grammar = evomt::parse_grammar(slurp(data_path("grammar.cfg")));
  return res;
}

}  // namespace testing
