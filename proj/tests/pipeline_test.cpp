#include "doctest.h"

#include <algorithm>

#include "evomt/pipeline.hpp"
#include "pipeline_fixture.hpp"

using evomt::EaConfig;
using evomt::TaggedToken;

namespace {

EaConfig seeded(std::uint64_t seed) {
  EaConfig cfg;
  cfg.seed = seed;
  return cfg;
}

std::vector<std::string> sorted_texts(const std::vector<TaggedToken>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.text);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("fixture sentence translates to I go home .") {
  const auto res = testing::fixture_resources();
  const auto r = evomt::translate_sentence(res, seeded(1), "mama gedara yami.");
  CHECK(r.rendered == "I go home .");
  CHECK(evomt::render(r.direct) == "I home go .");
  CHECK(r.target.tags == std::vector<std::string>{"PRP", "VB", "NN", "SYM"});
  REQUIRE(r.report.has_value());
  CHECK(r.report->best.fitness == 0u);
  CHECK(r.report->best.order == evomt::Order{0, 2, 1, 3});
}

TEST_CASE("Sinhala script input takes the same path") {
  const auto res = testing::fixture_resources();
  CHECK(evomt::translate_sentence(res, seeded(1), "මම ගෙදර යමි.").rendered == "I go home .");
}

TEST_CASE("sentences without a verb keep source order") {
  const auto res = testing::fixture_resources();
  const auto r = evomt::translate_sentence(res, seeded(1), "xqz wvb.");
  CHECK(r.rendered == "xqz wvb .");
  CHECK(r.target.status == evomt::TargetStatus::NoVerbFound);
  CHECK_FALSE(r.report.has_value());
}

TEST_CASE("empty sentence gives empty fields") {
  const auto res = testing::fixture_resources();
  const auto r = evomt::translate_sentence(res, seeded(1), "");
  CHECK(r.source_tokens.empty());
  CHECK(r.final.empty());
  CHECK(r.rendered.empty());
}

TEST_CASE("render joins with single spaces") {
  const std::vector<TaggedToken> t = {{"I", "PRP"}, {"go", "VB"}, {".", "SYM"}};
  CHECK(evomt::render(t) == "I go .");
  CHECK(evomt::render({}) == "");
}

TEST_CASE("reordering conserves the glossed words") {
  const auto res = testing::fixture_resources();
  const std::vector<std::string> inputs = {
      "mama gedara yami.", "lamayaa paasal yanawa.", "api bath kanawa.", "mama mudal daanawa.",
      "eyaa watura bonawa!", "oya potha kiyawanawa", "mama loku maalu allanawa.", "ganga ivura"};
  for (const auto& s : inputs) {
    const auto r = evomt::translate_sentence(res, seeded(7), s);
    CAPTURE(s);
    CHECK(r.final.size() == r.source_tokens.size());
    CHECK(sorted_texts(r.final) == sorted_texts(r.direct));
  }
}

TEST_CASE("retranslating rendered English is a fixed point of the reorderer") {
  // Rendered output is already SVO, so its derived target is itself.
  const auto res = testing::fixture_resources();
  const auto r = evomt::translate_sentence(res, seeded(1), "mama gedara yami.");
  std::vector<evomt::TagRequest> requests;
  for (const auto& t : r.final) requests.push_back({t.text, std::nullopt});
  const auto retagged = evomt::tag_tokens(res.taglex, requests);
  CHECK(retagged == r.final);
  const auto target = evomt::derive_target(retagged, res.grammar);
  const auto report = evomt::evolve(retagged, target.tags, seeded(1));
  CHECK(report.generations_run == 0);
  CHECK(evomt::render(evomt::apply_order(std::span<const TaggedToken>(retagged), report.best.order)) ==
        r.rendered);
}

TEST_CASE("translate_text keeps input order and ignores the worker count") {
  const auto res = testing::fixture_resources();
  const std::string text =
      "mama gedara yami. lamayaa paasal yanawa. api bath kanawa. xqz wvb. eyaa watura bonawa! "
      "mama mudal daanawa. oya potha kiyawanawa.";
  const auto one = evomt::translate_text(res, seeded(3), text, 1);
  REQUIRE(one.size() == 7);
  CHECK(one[0].rendered == "I go home .");
  CHECK(one[3].rendered == "xqz wvb .");
  for (std::size_t jobs : {2u, 4u, 16u}) {
    const auto many = evomt::translate_text(res, seeded(3), text, jobs);
    REQUIRE(many.size() == one.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(many[i].rendered == one[i].rendered);
      CHECK(many[i].report == one[i].report);
    }
  }
}

TEST_CASE("translation is deterministic for a seed") {
  const auto res = testing::fixture_resources();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto a = evomt::translate_sentence(res, seeded(seed), "lamayaa loku paasal yanawa.");
    const auto b = evomt::translate_sentence(res, seeded(seed), "lamayaa loku paasal yanawa.");
    CHECK(a.rendered == b.rendered);
    CHECK(a.report == b.report);
  }
}

}  // TEST_SUITE
