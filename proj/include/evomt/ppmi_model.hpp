#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace evomt {

// Unordered word pair stored as (smaller, larger) in byte order.
using WordPair = std::pair<std::string, std::string>;

WordPair make_pair_key(std::string_view x, std::string_view y);

// Sentence-level co-occurrence statistics. Words are lower-cased. Every stored
// count is positive; total_tokens and total_pairs are the sums of the maps.
struct CooccurrenceModel {
  std::map<std::string, std::uint64_t, std::less<>> unigram;
  std::map<WordPair, std::uint64_t> pair;
  std::uint64_t total_tokens = 0;
  std::uint64_t total_pairs = 0;

  bool operator==(const CooccurrenceModel&) const = default;

  bool contains(std::string_view word) const;
  std::uint64_t unigram_count(std::string_view word) const;
  std::uint64_t pair_count(std::string_view x, std::string_view y) const;

  // P(x) = unigram[x] / total_tokens; P(x,y) = pair[{x,y}] / total_pairs.
  double probability(std::string_view word) const;
  double joint_probability(std::string_view x, std::string_view y) const;
};

struct BuildOptions {
  // Maximum distance between two word positions for them to co-occur; nullopt
  // means the whole sentence.
  std::optional<std::size_t> window;
};

// Each corpus entry is one sentence. Digit and sign tokens are ignored; a
// sentence contributes one count per unordered pair of distinct word types.
// Throws EmptyCorpus when no word token is found.
CooccurrenceModel build_model(std::span<const std::string> corpus, const BuildOptions& options = {});

// log2(P(x,y) / (P(x) P(y))). Throws UnknownWord, or NoPairData when the pair
// never co-occurs.
double pmi(const CooccurrenceModel& model, std::string_view x, std::string_view y);

// max(pmi, 0), with 0 for pairs that never co-occur. Throws UnknownWord only.
double ppmi(const CooccurrenceModel& model, std::string_view x, std::string_view y);

// Versioned text layout:
//   ppmi-model v1
//   tokens <N>
//   pairs <M>
//   u <word> <count>          sorted by word
//   p <w1> <w2> <count>       w1 < w2, sorted by (w1, w2)
//   crc32 <8 hex digits>      CRC-32 of every preceding byte
// All lines end in LF.
std::string serialize_model(const CooccurrenceModel& model);
CooccurrenceModel parse_model(std::string_view bytes);

void save_model(const CooccurrenceModel& model, const std::filesystem::path& path);
CooccurrenceModel load_model(const std::filesystem::path& path);

}  // namespace evomt
