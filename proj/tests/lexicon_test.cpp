#include "doctest.h"

#include <map>
#include <sstream>

#include "evomt/error.hpp"
#include "evomt/lexicon.hpp"
#include "test_support.hpp"

using evomt::GlossEntry;
using evomt::Token;
using evomt::TokenKind;

namespace {

const char* kThreeRows =
    "# fixture\n"
    "mama\tI\tPRP\n"
    "gedara\thome\tNN\n"
    "yami\tgo\tVB\n";

}  // namespace

TEST_SUITE("lexicon") {

TEST_CASE("three-row fixture loads one entry per source word") {
  const auto lex = evomt::parse_lexicon(kThreeRows);
  CHECK(lex.entry_count() == 3);
  REQUIRE(lex.find("mama") != nullptr);
  CHECK(*lex.find("mama") == std::vector<GlossEntry>{{"I", "PRP"}});
}

TEST_CASE("comments and blank lines only give an empty lexicon") {
  CHECK(evomt::parse_lexicon("").entry_count() == 0);
  CHECK(evomt::parse_lexicon("# header\n\n# more\n").entry_count() == 0);
}

TEST_CASE("malformed rows name their line") {
  try {
    evomt::parse_lexicon("# c\nmama\tI\tPRP\ngedara\thome\n");
    FAIL("expected MalformedRow");
  } catch (const evomt::MalformedRow& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(evomt::parse_lexicon("mama\tI\tPRP\textra\n"), evomt::MalformedRow);
  CHECK_THROWS_AS(evomt::parse_lexicon("mama\tI\tPRON\n"), evomt::MalformedRow);
  CHECK_THROWS_AS(evomt::parse_lexicon("\tI\tPRP\n"), evomt::MalformedRow);
  CHECK_THROWS_AS(evomt::parse_lexicon(std::string("mama\t\xff\tPRP\n")), evomt::MalformedRow);
}

TEST_CASE("CRLF endings and duplicate senses") {
  const auto lex = evomt::parse_lexicon("ivura\tbank\tNN\r\nivura\tshore\tNN\r\nivura\tbank\tVB\r\n");
  CHECK(lex.entry_count() == 1);
  CHECK(*lex.find("ivura") == std::vector<GlossEntry>{{"bank", "NN"}, {"shore", "NN"}});
}

TEST_CASE("missing file is an IoFailure") {
  CHECK_THROWS_AS(evomt::load_lexicon("/nonexistent/lexicon.tsv"), evomt::IoFailure);
}

TEST_CASE("lookup classes") {
  const auto lex = evomt::parse_lexicon(kThreeRows);

  const auto hit = evomt::lookup(lex, {"mama", TokenKind::Word});
  REQUIRE(std::holds_alternative<evomt::Glosses>(hit));
  CHECK(std::get<evomt::Glosses>(hit).entries == std::vector<GlossEntry>{{"I", "PRP"}});

  const auto upper = evomt::lookup(lex, {"MAMA", TokenKind::Word});
  CHECK(std::holds_alternative<evomt::Glosses>(upper));

  const auto digit = evomt::lookup(lex, {"42", TokenKind::Digit});
  REQUIRE(std::holds_alternative<evomt::Passthrough>(digit));
  CHECK(std::get<evomt::Passthrough>(digit).token == Token{"42", TokenKind::Digit});

  const auto unknown = evomt::lookup(lex, {"blarg", TokenKind::Word});
  REQUIRE(std::holds_alternative<evomt::Passthrough>(unknown));
  CHECK(std::get<evomt::Passthrough>(unknown).token.text == "blarg");

  CHECK(std::holds_alternative<evomt::Passthrough>(evomt::lookup(lex, {".", TokenKind::Sign})));
}

TEST_CASE("shipped lexicon round-trips every row in file order") {
  const auto path = testing::data_path("lexicon.tsv");
  const auto lex = evomt::load_lexicon(path);

  std::map<std::string, std::vector<GlossEntry>> expected;
  std::istringstream in(testing::slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    expected[line.substr(0, t1)].push_back({line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1)});
  }
  CHECK(lex.entry_count() == expected.size());
  for (const auto& [source, senses] : expected) {
    const auto result = evomt::lookup(lex, {source, TokenKind::Word});
    REQUIRE(std::holds_alternative<evomt::Glosses>(result));
    const auto& got = std::get<evomt::Glosses>(result).entries;
    CHECK(got == senses);
    CHECK_FALSE(got.empty());
    // Pure: a second lookup agrees.
    CHECK(std::get<evomt::Glosses>(evomt::lookup(lex, {source, TokenKind::Word})).entries == got);
  }
}

}  // TEST_SUITE
