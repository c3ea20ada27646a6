#include "evomt/ea_reorder.hpp"

#include <map>

#include "evomt/tokenizer.hpp"

namespace evomt {

std::uint32_t Lcg64::uniform(std::uint32_t lo, std::uint32_t hi) noexcept {
  constexpr std::uint64_t kSpan = std::uint64_t{1} << 32;
  const std::uint64_t range = std::uint64_t{hi} - lo + 1;
  if (range == kSpan) return next_u32();
  const std::uint64_t limit = kSpan - kSpan % range;
  for (;;) {
    const std::uint64_t x = next_u32();
    if (x < limit) return lo + static_cast<std::uint32_t>(x % range);
  }
}

std::string_view to_string(Termination t) {
  return t == Termination::FitnessZero ? "fitness-zero" : "generation-cap";
}

std::size_t fitness(std::span<const std::string> candidate_tags, std::span<const std::string> target_tags) {
  return edit_distance(candidate_tags, target_tags);
}

bool has_trailing_sign(std::span<const TaggedToken> tagged) {
  return !tagged.empty() && classify_token(tagged.back().text) == TokenKind::Sign;
}

namespace {

bool is_verb_tag(const std::string& tag) { return tag.starts_with("VB"); }

bool is_leaf_with(const ChunkNode& node, std::string_view tag) {
  return !node.is_chunk() && node.tokens.front().tag == tag;
}

void append_tags(const ChunkNode& node, std::vector<std::string>& out) {
  for (const auto& t : node.tokens) out.push_back(t.tag);
}

}  // namespace

DerivedTarget derive_target(std::span<const TaggedToken> tagged, const ChunkGrammar& grammar,
                            bool anchor_trailing_sign) {
  DerivedTarget result;
  const bool has_verb =
      std::any_of(tagged.begin(), tagged.end(), [](const TaggedToken& t) { return is_verb_tag(t.tag); });
  if (!has_verb) {
    for (const auto& t : tagged) result.tags.push_back(t.tag);
    result.status = TargetStatus::NoVerbFound;
    return result;
  }

  const bool anchored = anchor_trailing_sign && has_trailing_sign(tagged);
  const auto body = tagged.first(tagged.size() - (anchored ? 1 : 0));
  auto items = chunk(grammar, body).items;

  std::vector<ChunkNode> subject;
  const auto it = std::find_if(items.begin(), items.end(), [](const ChunkNode& n) {
    return n.label == "NP" || is_leaf_with(n, "PRP");
  });
  if (it != items.end()) {
    if (it->is_chunk() && it->children.size() > 1 && is_leaf_with(it->children.front(), "PRP")) {
      subject.push_back(it->children.front());
      it->children.erase(it->children.begin());
      it->tokens.erase(it->tokens.begin());
    } else {
      auto first = it;
      if (first != items.begin() && is_leaf_with(*std::prev(first), "DT")) --first;
      subject.assign(std::make_move_iterator(first), std::make_move_iterator(std::next(it)));
      items.erase(first, std::next(it));
    }
  }

  for (const auto& n : subject) append_tags(n, result.tags);
  for (const auto& n : items) {
    if (n.label == "VERB" || (!n.is_chunk() && is_verb_tag(n.tokens.front().tag))) {
      append_tags(n, result.tags);
    }
  }
  for (const auto& n : items) {
    if (!(n.label == "VERB" || (!n.is_chunk() && is_verb_tag(n.tokens.front().tag)))) {
      append_tags(n, result.tags);
    }
  }
  if (anchored) result.tags.push_back(tagged.back().tag);
  return result;
}

Order mutate(Lcg64& rng, const Order& order, bool anchor_last) {
  const std::size_t m = order.size() - (anchor_last && !order.empty() ? 1 : 0);
  if (m <= 1) return order;
  const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::uint32_t>(m - 1)));
  const auto d = static_cast<std::size_t>(rng.uniform(1, static_cast<std::uint32_t>(m - 1)));
  return paste(order, i, d, m);
}

Order paste(const Order& order, std::size_t index, std::size_t distance, std::size_t span) {
  Order out = order;
  const std::size_t moved = out[index];
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  out.insert(out.begin() + static_cast<std::ptrdiff_t>((index + distance) % span), moved);
  return out;
}

EvolutionReport evolve_sequence(std::span<const std::string> keys, std::span<const std::string> target,
                                const EaConfig& config, bool anchor_last) {
  // Distance is computed over interned ids rather than strings.
  std::map<std::string, int, std::less<>> ids;
  auto intern = [&](const std::string& s) {
    return ids.emplace(s, static_cast<int>(ids.size())).first->second;
  };
  std::vector<int> key_ids;
  for (const auto& k : keys) key_ids.push_back(intern(k));
  std::vector<int> target_ids;
  for (const auto& t : target) target_ids.push_back(intern(t));

  std::vector<int> scratch(key_ids.size());
  auto evaluate = [&](const Order& order) {
    for (std::size_t k = 0; k < order.size(); ++k) scratch[k] = key_ids[order[k]];
    return edit_distance(std::span<const int>(scratch), std::span<const int>(target_ids));
  };

  Lcg64 rng(config.seed);
  EvolutionReport report;
  Candidate parent{Order(keys.size()), std::nullopt};
  std::iota(parent.order.begin(), parent.order.end(), std::size_t{0});
  parent.fitness = evaluate(parent.order);

  std::size_t generation = 0;
  while (*parent.fitness > 0 && generation < config.max_generations) {
    std::optional<Candidate> best_child;
    for (std::size_t c = 0; c < config.children_per_generation; ++c) {
      Order child = mutate(rng, parent.order, anchor_last);
      const std::size_t f = evaluate(child);
      if (!best_child || f < *best_child->fitness) best_child = Candidate{std::move(child), f};
    }
    if (best_child && *best_child->fitness <= *parent.fitness) parent = std::move(*best_child);
    ++generation;
    report.trace.push_back({generation, *parent.fitness, parent.order});
  }

  report.best = std::move(parent);
  report.generations_run = generation;
  report.terminated_by = *report.best.fitness == 0 ? Termination::FitnessZero : Termination::GenerationCap;
  return report;
}

EvolutionReport evolve(std::span<const TaggedToken> tagged, std::span<const std::string> target_tags,
                       const EaConfig& config) {
  std::vector<std::string> tags;
  tags.reserve(tagged.size());
  for (const auto& t : tagged) tags.push_back(t.tag);
  const bool anchor_last = config.anchor_trailing_sign && has_trailing_sign(tagged);
  return evolve_sequence(tags, target_tags, config, anchor_last);
}

std::string format_trace(const EvolutionReport& report) {
  std::string out;
  for (const auto& rec : report.trace) {
    out += "gen " + std::to_string(rec.generation) + " best " + std::to_string(rec.best_fitness) + " order";
    for (std::size_t idx : rec.parent) out += " " + std::to_string(idx);
    out += '\n';
  }
  return out;
}

}  // namespace evomt
