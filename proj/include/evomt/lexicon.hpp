#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evomt/tokenizer.hpp"

namespace evomt {

struct GlossEntry {
  std::string gloss;
  std::string pos;

  bool operator==(const GlossEntry&) const = default;
};

struct Glosses {
  std::vector<GlossEntry> entries;
};

struct Passthrough {
  Token token;
};

using LookupResult = std::variant<Glosses, Passthrough>;

// Sinhala-to-English dictionary. Keys are lower-cased source words and each
// maps to its senses in file order; the first sense is the default.
class BilingualLexicon {
 public:
  using EntryMap = std::map<std::string, std::vector<GlossEntry>, std::less<>>;

  // Returns false when (source, gloss) is already present. Throws
  // std::invalid_argument on an empty gloss or a POS outside the tagset.
  bool add(std::string_view source, GlossEntry entry);

  // nullptr when the source word is absent. Matching is case-insensitive.
  const std::vector<GlossEntry>* find(std::string_view source) const;

  std::size_t entry_count() const noexcept { return entries_.size(); }
  const EntryMap& entries() const noexcept { return entries_; }

 private:
  EntryMap entries_;
};

// File format: UTF-8, one `source<TAB>gloss<TAB>POS` row per sense, `#` in
// column 1 starts a comment, blank lines are ignored, LF or CRLF endings.
BilingualLexicon load_lexicon(const std::filesystem::path& path);
BilingualLexicon parse_lexicon(std::string_view content, const std::string& source_name = "<lexicon>");

LookupResult lookup(const BilingualLexicon& lex, const Token& token);

}  // namespace evomt
