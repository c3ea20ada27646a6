#include "json_output.hpp"

#include <variant>

namespace evomt::cli {

namespace {

nlohmann::json tagged_json(std::span<const TaggedToken> tokens) {
  auto arr = nlohmann::json::array();
  for (const auto& t : tokens) arr.push_back({{"text", t.text}, {"tag", t.tag}});
  return arr;
}

nlohmann::json gloss_json(const GlossEntry& g) { return {{"gloss", g.gloss}, {"pos", g.pos}}; }

nlohmann::json resolved_json(const ResolvedToken& r) {
  if (const auto* c = std::get_if<SenseChoice>(&r)) {
    auto alts = nlohmann::json::array();
    for (const auto& [entry, score] : c->alternatives) {
      auto j = gloss_json(entry);
      j["score"] = score;
      alts.push_back(std::move(j));
    }
    return {{"source", c->source.text},
            {"chosen", gloss_json(c->chosen)},
            {"score", c->score},
            {"alternatives", std::move(alts)}};
  }
  const auto& p = std::get<Passthrough>(r);
  return {{"source", p.token.text}, {"passthrough", true}};
}

nlohmann::json order_json(const Order& order) {
  auto arr = nlohmann::json::array();
  for (auto idx : order) arr.push_back(idx);
  return arr;
}

}  // namespace

nlohmann::json to_json(const TranslationResult& result) {
  nlohmann::json j;
  auto source = nlohmann::json::array();
  for (const auto& t : result.source_tokens) {
    source.push_back({{"text", t.text}, {"kind", std::string(to_string(t.kind))}});
  }
  j["source"] = std::move(source);

  auto glossed = nlohmann::json::array();
  for (const auto& r : result.glossed) glossed.push_back(resolved_json(r));
  j["glossed"] = std::move(glossed);

  j["direct"] = tagged_json(result.direct);
  j["target"] = result.target.tags;
  j["no_verb"] = result.target.status == TargetStatus::NoVerbFound;
  j["final"] = tagged_json(result.final);
  j["rendered"] = result.rendered;

  if (result.report) {
    const auto& rep = *result.report;
    auto trace = nlohmann::json::array();
    for (const auto& rec : rep.trace) {
      trace.push_back({{"gen", rec.generation}, {"best", rec.best_fitness}, {"order", order_json(rec.parent)}});
    }
    j["report"] = {{"best_order", order_json(rep.best.order)},
                   {"best_fitness", rep.best.fitness.value_or(0)},
                   {"generations_run", rep.generations_run},
                   {"terminated_by", std::string(to_string(rep.terminated_by))},
                   {"trace", std::move(trace)}};
  } else {
    j["report"] = nullptr;
  }
  return j;
}

}  // namespace evomt::cli
