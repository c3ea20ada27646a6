#include "evomt/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace evomt {

std::string render(std::span<const TaggedToken> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

TranslationResult translate_sentence(const Resources& resources, const EaConfig& config,
                                     std::string_view sentence) {
  TranslationResult result;
  result.source_tokens = tokenize(sentence);
  result.glossed = disambiguate_sentence(resources.model, resources.lexicon, result.source_tokens);

  std::vector<TagRequest> requests;
  requests.reserve(result.glossed.size());
  for (const auto& resolved : result.glossed) {
    if (const auto* choice = std::get_if<SenseChoice>(&resolved)) {
      requests.push_back({choice->chosen.gloss, choice->chosen.pos});
    } else {
      requests.push_back({std::get<Passthrough>(resolved).token.text, std::nullopt});
    }
  }
  result.direct = tag_tokens(resources.taglex, requests);

  result.target = derive_target(result.direct, resources.grammar, config.anchor_trailing_sign);
  if (result.target.status == TargetStatus::NoVerbFound) {
    result.final = result.direct;
  } else {
    result.report = evolve(result.direct, result.target.tags, config);
    result.final = apply_order(std::span<const TaggedToken>(result.direct), result.report->best.order);
  }
  result.rendered = render(result.final);
  return result;
}

std::vector<TranslationResult> translate_text(const Resources& resources, const EaConfig& config,
                                              std::string_view text, std::size_t jobs) {
  const auto sentences = split_sentences(text);
  std::vector<TranslationResult> results(sentences.size());
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(sentences.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      results[i] = translate_sentence(resources, config, sentences[i]);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < sentences.size(); i = next++) {
          results[i] = translate_sentence(resources, config, sentences[i]);
        }
      });
    }
  }
  return results;
}

}  // namespace evomt
