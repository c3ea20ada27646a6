#include "evomt/pos_tagger.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "evomt/error.hpp"
#include "evomt/tagset.hpp"
#include "evomt/tokenizer.hpp"
#include "evomt/unicode.hpp"
#include "text_file.hpp"

namespace evomt {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kSuffixRules = {{
    {"ly", "RB"},
    {"ing", "VBG"},
    {"ed", "VBD"},
    {"est", "JJS"},
    {"er", "JJR"},
    {"s", "NNS"},
}};

std::string_view suffix_tag(std::string_view lowered) {
  for (const auto& [suffix, tag] : kSuffixRules) {
    if (lowered.size() > suffix.size() && lowered.ends_with(suffix)) return tag;
  }
  return "NN";
}

}  // namespace

void TagLexicon::add(std::string_view word, std::string_view tag) {
  if (word.empty()) throw std::invalid_argument("empty word");
  if (!is_tag(tag)) throw std::invalid_argument("unknown POS tag '" + std::string(tag) + "'");
  entries_[to_lower(word)] = std::string(tag);
}

std::optional<std::string_view> TagLexicon::find(std::string_view word) const {
  const auto it = entries_.find(to_lower(word));
  if (it == entries_.end()) return std::nullopt;
  return std::string_view(it->second);
}

TagLexicon parse_tag_lexicon(std::string_view content, const std::string& source_name) {
  TagLexicon taglex;
  const auto lines = detail::split_lines(content);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = lines[n];
    if (line.empty() || line.front() == '#') continue;
    if (!is_valid_utf8(line)) throw MalformedRow(source_name, n + 1, "invalid UTF-8");
    const auto fields = detail::split_fields(line, '\t');
    if (fields.size() != 2 || fields[0].empty()) {
      throw MalformedRow(source_name, n + 1, "expected word<TAB>TAG");
    }
    if (!is_tag(fields[1])) {
      throw MalformedRow(source_name, n + 1, "unknown POS tag '" + std::string(fields[1]) + "'");
    }
    taglex.add(fields[0], fields[1]);
  }
  return taglex;
}

TagLexicon load_tag_lexicon(const std::filesystem::path& path) {
  return parse_tag_lexicon(detail::read_file(path), path.string());
}

std::string tag_word(const TagLexicon& taglex, std::string_view text) {
  if (const auto tag = taglex.find(text)) return std::string(*tag);
  switch (classify_token(text).value_or(TokenKind::Word)) {
    case TokenKind::Digit:
      return "CD";
    case TokenKind::Sign:
      return "SYM";
    case TokenKind::Word:
      break;
  }
  return std::string(suffix_tag(to_lower(text)));
}

std::vector<TaggedToken> tag_tokens(const TagLexicon& taglex, std::span<const TagRequest> tokens) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t.dictionary_tag && is_tag(*t.dictionary_tag)) {
      out.push_back({t.text, *t.dictionary_tag});
    } else {
      out.push_back({t.text, tag_word(taglex, t.text)});
    }
  }
  return out;
}

std::vector<TaggedToken> parse_tagged_text(std::string_view line) {
  std::vector<TaggedToken> out;
  std::istringstream in{std::string(line)};
  std::string item;
  while (in >> item) {
    const auto slash = item.rfind('/');
    if (slash == std::string::npos || slash == 0) {
      throw std::invalid_argument("expected word/TAG, got '" + item + "'");
    }
    std::string tag = item.substr(slash + 1);
    if (!is_tag(tag)) throw std::invalid_argument("unknown POS tag in '" + item + "'");
    out.push_back({item.substr(0, slash), std::move(tag)});
  }
  return out;
}

std::string format_tagged(std::span<const TaggedToken> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
    out += '/';
    out += t.tag;
  }
  return out;
}

}  // namespace evomt
