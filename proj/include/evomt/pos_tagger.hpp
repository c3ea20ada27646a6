#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evomt {

struct TaggedToken {
  std::string text;
  std::string tag;

  bool operator==(const TaggedToken&) const = default;
};

// Word-to-tag table consulted for tokens without a dictionary tag.
class TagLexicon {
 public:
  // Later entries for the same word replace earlier ones. Throws
  // std::invalid_argument for tags outside the tagset.
  void add(std::string_view word, std::string_view tag);
  std::optional<std::string_view> find(std::string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// `word<TAB>TAG` rows, `#` comments, blank lines ignored.
TagLexicon parse_tag_lexicon(std::string_view content, const std::string& source_name = "<taglex>");
TagLexicon load_tag_lexicon(const std::filesystem::path& path);

struct TagRequest {
  std::string text;
  std::optional<std::string> dictionary_tag;
};

// Tag priority: dictionary tag, tag lexicon, CD/SYM for digit/sign tokens,
// suffix rules (-ly RB, -ing VBG, -ed VBD, -est JJS, -er JJR, -s NNS), NN.
std::vector<TaggedToken> tag_tokens(const TagLexicon& taglex, std::span<const TagRequest> tokens);

// Tag for a single token with no dictionary tag.
std::string tag_word(const TagLexicon& taglex, std::string_view text);

// Parses whitespace-separated `word/TAG` items; the split is at the last '/'.
// Throws std::invalid_argument on a missing slash or unknown tag.
std::vector<TaggedToken> parse_tagged_text(std::string_view line);
std::string format_tagged(std::span<const TaggedToken> tokens);

}  // namespace evomt
