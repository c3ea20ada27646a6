#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evomt/chunk_grammar.hpp"
#include "evomt/pos_tagger.hpp"

namespace evomt {

// 64-bit LCG (Knuth's MMIX constants); each draw advances the state and
// returns its top 32 bits. Bounded draws reject the biased tail.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint32_t next_u32() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  // Uniform on the closed range [lo, hi]; requires lo <= hi.
  std::uint32_t uniform(std::uint32_t lo, std::uint32_t hi) noexcept;

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

// A word order: position k of the sentence holds token order[k].
using Order = std::vector<std::size_t>;

struct Candidate {
  Order order;
  std::optional<std::size_t> fitness;  // nullopt until evaluated

  bool operator==(const Candidate&) const = default;
};

struct GenerationRecord {
  std::size_t generation = 0;  // 1-based
  std::size_t best_fitness = 0;
  Order parent;

  bool operator==(const GenerationRecord&) const = default;
};

enum class Termination { FitnessZero, GenerationCap };

std::string_view to_string(Termination t);

struct EvolutionReport {
  Candidate best;
  std::size_t generations_run = 0;
  std::vector<GenerationRecord> trace;
  Termination terminated_by = Termination::GenerationCap;

  bool operator==(const EvolutionReport&) const = default;
};

struct EaConfig {
  std::size_t children_per_generation = 100;
  std::size_t max_generations = 1000;
  std::uint64_t seed = 0;
  bool anchor_trailing_sign = true;
};

// Unit-cost Levenshtein distance.
template <class T>
std::size_t edit_distance(std::span<const T> a, std::span<const T> b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    prev.swap(cur);
  }
  return prev[b.size()];
}

// Edit distance between a candidate's tag sequence and the target.
std::size_t fitness(std::span<const std::string> candidate_tags, std::span<const std::string> target_tags);

enum class TargetStatus { Ok, NoVerbFound };

struct DerivedTarget {
  std::vector<std::string> tags;
  TargetStatus status = TargetStatus::Ok;
};

// Subject-verb-object tag template for an SOV-ordered sentence: the subject
// (first NP chunk with an immediately preceding DT, or a bare pronoun; a
// pronoun opening a longer NP is split off as the subject), then verbs in
// order, then everything else in order. A trailing sign stays last when
// anchored. Without any VB* tag the input order is returned as NoVerbFound.
DerivedTarget derive_target(std::span<const TaggedToken> tagged, const ChunkGrammar& grammar,
                            bool anchor_trailing_sign = true);

// Removes order[index] and reinserts it at (index + distance) mod span. Only
// the first `span` positions take part.
Order paste(const Order& order, std::size_t index, std::size_t distance, std::size_t span);

// Paste mutation: take the element at a random index i and reinsert it at
// (i + d) mod m for a random d in [1, m-1], where m excludes the final slot
// when `anchor_last` is set.
Order mutate(Lcg64& rng, const Order& order, bool anchor_last);

// Single-parent elitist search starting from the identity order. Each
// generation breeds children_per_generation mutants of the parent; the
// fittest of parent and children survives. A child that only equals the
// parent still replaces it (earliest child first), so the search can walk
// across plateaus of equal distance.
EvolutionReport evolve(std::span<const TaggedToken> tagged, std::span<const std::string> target_tags,
                       const EaConfig& config);

// The same search over arbitrary keys (tags, or words in reference mode).
EvolutionReport evolve_sequence(std::span<const std::string> keys, std::span<const std::string> target,
                                const EaConfig& config, bool anchor_last);

// True when the last token is a sign and anchoring applies.
bool has_trailing_sign(std::span<const TaggedToken> tagged);

// One `gen <k> best <fitness> order <i> <j> ...` line per generation.
std::string format_trace(const EvolutionReport& report);

template <class T>
std::vector<T> apply_order(std::span<const T> items, const Order& order) {
  std::vector<T> out;
  out.reserve(order.size());
  for (std::size_t idx : order) out.push_back(items[idx]);
  return out;
}

}  // namespace evomt
