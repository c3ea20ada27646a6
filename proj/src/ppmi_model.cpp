#include "evomt/ppmi_model.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

#include "evomt/error.hpp"
#include "evomt/tokenizer.hpp"
#include "evomt/unicode.hpp"
#include "text_file.hpp"

namespace evomt {

namespace {

constexpr std::string_view kHeader = "ppmi-model v1";
constexpr std::string_view kChecksumTag = "crc32 ";

std::uint32_t crc32_of(std::string_view bytes) {
  return static_cast<std::uint32_t>(
      crc32_z(0L, reinterpret_cast<const Bytef*>(bytes.data()), bytes.size()));
}

std::optional<std::uint64_t> parse_count(std::string_view s) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::uint64_t require_count(std::string_view s, std::size_t line, bool allow_zero = false) {
  const auto v = parse_count(s);
  if (!v || (!allow_zero && *v == 0)) {
    throw MalformedModel(line, "bad count '" + std::string(s) + "'");
  }
  return *v;
}

}  // namespace

WordPair make_pair_key(std::string_view x, std::string_view y) {
  if (y < x) std::swap(x, y);
  return {std::string(x), std::string(y)};
}

bool CooccurrenceModel::contains(std::string_view word) const {
  return unigram.find(to_lower(word)) != unigram.end();
}

std::uint64_t CooccurrenceModel::unigram_count(std::string_view word) const {
  const auto it = unigram.find(to_lower(word));
  return it == unigram.end() ? 0 : it->second;
}

std::uint64_t CooccurrenceModel::pair_count(std::string_view x, std::string_view y) const {
  const auto it = pair.find(make_pair_key(to_lower(x), to_lower(y)));
  return it == pair.end() ? 0 : it->second;
}

double CooccurrenceModel::probability(std::string_view word) const {
  if (total_tokens == 0) return 0.0;
  return static_cast<double>(unigram_count(word)) / static_cast<double>(total_tokens);
}

double CooccurrenceModel::joint_probability(std::string_view x, std::string_view y) const {
  if (total_pairs == 0) return 0.0;
  return static_cast<double>(pair_count(x, y)) / static_cast<double>(total_pairs);
}

CooccurrenceModel build_model(std::span<const std::string> corpus, const BuildOptions& options) {
  CooccurrenceModel model;
  for (const auto& sentence : corpus) {
    std::vector<std::string> words;
    for (auto& token : tokenize(sentence)) {
      if (token.kind == TokenKind::Word) words.push_back(to_lower(token.text));
    }
    for (const auto& w : words) ++model.unigram[w];
    model.total_tokens += words.size();

    std::set<WordPair> seen;
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::size_t limit = words.size();
      if (options.window) limit = std::min(limit, i + *options.window + 1);
      for (std::size_t j = i + 1; j < limit; ++j) {
        if (words[i] != words[j]) seen.insert(make_pair_key(words[i], words[j]));
      }
    }
    for (const auto& key : seen) ++model.pair[key];
    model.total_pairs += seen.size();
  }
  if (model.total_tokens == 0) throw EmptyCorpus();
  return model;
}

double pmi(const CooccurrenceModel& model, std::string_view x, std::string_view y) {
  const std::uint64_t cx = model.unigram_count(x);
  if (cx == 0) throw UnknownWord(std::string(x));
  const std::uint64_t cy = model.unigram_count(y);
  if (cy == 0) throw UnknownWord(std::string(y));
  const std::uint64_t cxy = model.pair_count(x, y);
  if (cxy == 0 || model.total_pairs == 0) throw NoPairData(std::string(x), std::string(y));

  const double n = static_cast<double>(model.total_tokens);
  const double joint = static_cast<double>(cxy) / static_cast<double>(model.total_pairs);
  const double px = static_cast<double>(cx) / n;
  const double py = static_cast<double>(cy) / n;
  return std::log2(joint / (px * py));
}

double ppmi(const CooccurrenceModel& model, std::string_view x, std::string_view y) {
  if (!model.contains(x)) throw UnknownWord(std::string(x));
  if (!model.contains(y)) throw UnknownWord(std::string(y));
  if (model.pair_count(x, y) == 0) return 0.0;
  return std::max(pmi(model, x, y), 0.0);
}

std::string serialize_model(const CooccurrenceModel& model) {
  std::string out;
  out.append(kHeader).append("\n");
  out.append("tokens ").append(std::to_string(model.total_tokens)).append("\n");
  out.append("pairs ").append(std::to_string(model.total_pairs)).append("\n");
  for (const auto& [word, count] : model.unigram) {
    out.append("u ").append(word).append(" ").append(std::to_string(count)).append("\n");
  }
  for (const auto& [key, count] : model.pair) {
    out.append("p ").append(key.first).append(" ").append(key.second);
    out.append(" ").append(std::to_string(count)).append("\n");
  }
  char crc[16];
  std::snprintf(crc, sizeof crc, "%08x", crc32_of(out));
  out.append(kChecksumTag).append(crc).append("\n");
  return out;
}

CooccurrenceModel parse_model(std::string_view bytes) {
  const std::size_t header_end = bytes.find('\n');
  std::string_view header = bytes.substr(0, header_end);
  if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
  if (header != kHeader) throw FormatVersionMismatch(std::string(header));

  const std::size_t crc_pos = bytes.rfind(std::string("\n").append(kChecksumTag));
  if (crc_pos == std::string_view::npos) throw ChecksumMismatch("missing checksum line (truncated file?)");
  const std::string_view body = bytes.substr(0, crc_pos + 1);
  std::string_view crc_line = bytes.substr(crc_pos + 1 + kChecksumTag.size());
  if (crc_line.empty() || crc_line.back() != '\n') throw ChecksumMismatch("unterminated checksum line");
  crc_line.remove_suffix(1);
  if (crc_line.find('\n') != std::string_view::npos) throw ChecksumMismatch("data after checksum line");

  std::uint32_t stored = 0;
  const auto [ptr, ec] = std::from_chars(crc_line.data(), crc_line.data() + crc_line.size(), stored, 16);
  if (ec != std::errc() || ptr != crc_line.data() + crc_line.size() || crc_line.size() != 8) {
    throw ChecksumMismatch("unreadable checksum '" + std::string(crc_line) + "'");
  }
  if (stored != crc32_of(body)) throw ChecksumMismatch("checksum does not match contents");

  CooccurrenceModel model;
  const auto lines = detail::split_lines(body);
  if (lines.size() < 3) throw MalformedModel(lines.size() + 1, "missing totals");

  auto expect_total = [&](std::size_t idx, std::string_view tag) {
    const auto fields = detail::split_fields(lines[idx], ' ');
    if (fields.size() != 2 || fields[0] != tag) {
      throw MalformedModel(idx + 1, "expected '" + std::string(tag) + " <count>'");
    }
    return require_count(fields[1], idx + 1, true);
  };
  const std::uint64_t tokens = expect_total(1, "tokens");
  const std::uint64_t pairs = expect_total(2, "pairs");

  bool in_pairs = false;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = detail::split_fields(lines[i], ' ');
    if (fields.size() == 3 && fields[0] == "u" && !in_pairs) {
      const std::string word(fields[1]);
      if (word.empty()) throw MalformedModel(line_no, "empty word");
      if (!model.unigram.empty() && !(model.unigram.rbegin()->first < word)) {
        throw MalformedModel(line_no, "unigram rows out of order");
      }
      model.unigram.emplace(word, require_count(fields[2], line_no));
    } else if (fields.size() == 4 && fields[0] == "p") {
      in_pairs = true;
      WordPair key{std::string(fields[1]), std::string(fields[2])};
      if (!(key.first < key.second)) throw MalformedModel(line_no, "pair words not in order");
      if (!model.unigram.contains(key.first) || !model.unigram.contains(key.second)) {
        throw MalformedModel(line_no, "pair word missing from unigrams");
      }
      if (!model.pair.empty() && !(model.pair.rbegin()->first < key)) {
        throw MalformedModel(line_no, "pair rows out of order");
      }
      model.pair.emplace(std::move(key), require_count(fields[3], line_no));
    } else {
      throw MalformedModel(line_no, "unrecognized row");
    }
  }

  for (const auto& [w, c] : model.unigram) model.total_tokens += c;
  for (const auto& [k, c] : model.pair) model.total_pairs += c;
  if (model.total_tokens != tokens) throw MalformedModel(2, "token total disagrees with unigram rows");
  if (model.total_pairs != pairs) throw MalformedModel(3, "pair total disagrees with pair rows");
  return model;
}

void save_model(const CooccurrenceModel& model, const std::filesystem::path& path) {
  detail::write_file(path, serialize_model(model));
}

CooccurrenceModel load_model(const std::filesystem::path& path) {
  return parse_model(detail::read_file(path));
}

}  // namespace evomt
