#include "doctest.h"

#include "evomt/disambiguator.hpp"
#include "evomt/unicode.hpp"
#include "oracles.hpp"
#include "test_support.hpp"
#include "wsd_fixture.hpp"

using evomt::Token;
using evomt::TokenKind;

namespace {

// ppmi(shore, river) > 0 and bank never meets river.
const std::vector<std::string> kToyCorpus = {
    "river shore water", "river shore", "bank money", "bank money account", "bank loan", "river fish",
};

std::vector<std::string> chosen_glosses(const std::vector<evomt::ResolvedToken>& resolved) {
  std::vector<std::string> out;
  for (const auto& r : resolved) {
    if (const auto* c = std::get_if<evomt::SenseChoice>(&r)) {
      out.push_back(c->chosen.gloss);
    } else {
      out.push_back("<" + std::get<evomt::Passthrough>(r).token.text + ">");
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("disambiguator") {

TEST_CASE("score_gloss sums best context ppmi") {
  const auto model = evomt::build_model(kToyCorpus);
  const auto counts = oracle::count_pairs(kToyCorpus);

  const std::vector<std::vector<std::string>> river = {{"river"}};
  const double shore = evomt::score_gloss(model, "shore", river);
  CHECK(shore == doctest::Approx(oracle::ppmi(counts, "shore", "river")).epsilon(1e-12));
  CHECK(shore == doctest::Approx(2.70781924850669).epsilon(1e-12));
  CHECK(evomt::score_gloss(model, "bank", river) == 0.0);

  CHECK(evomt::score_gloss(model, "shore", {}) == 0.0);
  const std::vector<std::vector<std::string>> unknown = {{"zebra", "yak"}, {"xylophone"}};
  CHECK(evomt::score_gloss(model, "shore", unknown) == 0.0);
  CHECK(evomt::score_gloss(model, "zebra", river) == 0.0);

  // Max within a position, sum across positions.
  const std::vector<std::vector<std::string>> two = {{"bank", "river"}, {"water"}};
  CHECK(evomt::score_gloss(model, "shore", two) ==
        doctest::Approx(oracle::ppmi(counts, "shore", "river") + oracle::ppmi(counts, "shore", "water")));
}

TEST_CASE("ambiguous word resolves toward its context") {
  const auto model = evomt::build_model(kToyCorpus);
  const auto lex = evomt::parse_lexicon("w\tbank\tNN\nw\tshore\tNN\nr\triver\tNN\n");
  const std::vector<Token> tokens = {{"r", TokenKind::Word}, {"w", TokenKind::Word}};

  const auto resolved = evomt::disambiguate_sentence(model, lex, tokens);
  CHECK(chosen_glosses(resolved) == std::vector<std::string>{"river", "shore"});

  const auto& choice = std::get<evomt::SenseChoice>(resolved[1]);
  REQUIRE(choice.alternatives.size() == 1);
  CHECK(choice.alternatives[0].first.gloss == "bank");
  CHECK(choice.score >= choice.alternatives[0].second);

  const auto counts = oracle::count_pairs(kToyCorpus);
  const auto best = oracle::best_sense_combination({{"river"}, {"bank", "shore"}},
                                                   [&](const std::string& x, const std::string& y) {
                                                     return oracle::ppmi(counts, x, y);
                                                   });
  CHECK(best == std::vector<std::size_t>{0, 1});
}

TEST_CASE("single-sense words and passthroughs are unchanged") {
  const auto model = evomt::build_model(kToyCorpus);
  const auto lex = evomt::parse_lexicon("mama\tI\tPRP\ngedara\thome\tNN\nyami\tgo\tVB\n");
  const auto tokens = evomt::tokenize("mama gedara 42 blarg yami.");
  const auto resolved = evomt::disambiguate_sentence(model, lex, tokens);
  REQUIRE(resolved.size() == tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto plain = evomt::lookup(lex, tokens[i]);
    if (const auto* g = std::get_if<evomt::Glosses>(&plain)) {
      const auto& c = std::get<evomt::SenseChoice>(resolved[i]);
      CHECK(c.source == tokens[i]);
      CHECK(c.chosen == g->entries.front());
      CHECK(c.alternatives.empty());
    } else {
      CHECK(std::get<evomt::Passthrough>(resolved[i]).token == tokens[i]);
    }
  }
}

TEST_CASE("all-zero scores choose the first sense") {
  const auto model = evomt::build_model(kToyCorpus);
  const auto lex = evomt::parse_lexicon("p\tzeta\tNN\np\teta\tNN\nq\ttheta\tNN\nq\tiota\tNN\nq\tkappa\tNN\n");
  const auto resolved = evomt::disambiguate_sentence(model, lex, evomt::tokenize("p q"));
  CHECK(chosen_glosses(resolved) == std::vector<std::string>{"zeta", "theta"});
}

TEST_CASE("empty model degrades to first sense") {
  const evomt::CooccurrenceModel empty;
  const auto lex = evomt::load_lexicon(testing::data_path("lexicon.tsv"));
  const auto resolved = evomt::disambiguate_sentence(empty, lex, evomt::tokenize("ganga ivura"));
  CHECK(chosen_glosses(resolved) == std::vector<std::string>{"river", "bank"});
}

TEST_CASE("shipped fixtures: frozen choices and exhaustive agreement") {
  const auto lex = evomt::load_lexicon(testing::data_path("lexicon.tsv"));
  const auto model = evomt::load_model(testing::data_path("model.ppmi"));
  std::vector<std::string> corpus;
  std::istringstream in(testing::slurp(testing::data_path("corpus.txt")));
  for (std::string line; std::getline(in, line);) corpus.push_back(line);
  const auto counts = oracle::count_pairs(corpus);

  // Expected values come from an offline exhaustive search over the shipped corpus.
  const std::map<std::string, std::vector<std::string>> frozen = {
      {"ganga ivura", {"river", "shore"}},
      {"maalu ganga ivura", {"fish", "river", "shore"}},
      {"mudal ivura", {"money", "bank"}},
      {"mama mudal daanawa", {"I", "money", "deposit"}},
      {"mudal ivura daanawa", {"money", "bank", "deposit"}},
      {"mesa ivura", {"table", "edge"}},
      {"mesa potha daanawa", {"table", "book", "put"}},
      {"ගඟ ඉවුර", {"river", "shore"}},
  };
  const auto sentences = testing::wsd_sentences();
  CHECK(sentences.size() == frozen.size());
  for (const auto& s : sentences) {
    CAPTURE(s);
    const auto cmp = testing::compare_senses(model, counts, lex, s);
    CHECK(cmp.greedy == cmp.exhaustive);
    CHECK(cmp.greedy == frozen.at(s));
  }
}

TEST_CASE("deterministic and order preserving") {
  const auto lex = evomt::load_lexicon(testing::data_path("lexicon.tsv"));
  const auto model = evomt::load_model(testing::data_path("model.ppmi"));
  const auto tokens = evomt::tokenize("mudal ivura, daanawa 7 zzz.");
  const auto a = evomt::disambiguate_sentence(model, lex, tokens);
  const auto b = evomt::disambiguate_sentence(model, lex, tokens);
  CHECK(chosen_glosses(a) == chosen_glosses(b));
  CHECK(a.size() == tokens.size());
}

}  // TEST_SUITE
