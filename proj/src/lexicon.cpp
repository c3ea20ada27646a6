#include "evomt/lexicon.hpp"

#include <algorithm>
#include <stdexcept>

#include "evomt/error.hpp"
#include "evomt/tagset.hpp"
#include "evomt/unicode.hpp"
#include "text_file.hpp"

namespace evomt {

bool BilingualLexicon::add(std::string_view source, GlossEntry entry) {
  if (source.empty()) throw std::invalid_argument("empty source word");
  if (entry.gloss.empty()) throw std::invalid_argument("empty gloss");
  if (entry.gloss.find_first_of("\t\n") != std::string::npos) {
    throw std::invalid_argument("gloss contains tab or newline");
  }
  if (!is_tag(entry.pos)) throw std::invalid_argument("unknown POS tag '" + entry.pos + "'");

  auto& senses = entries_[to_lower(source)];
  const bool seen = std::any_of(senses.begin(), senses.end(),
                                [&](const GlossEntry& e) { return e.gloss == entry.gloss; });
  if (seen) return false;
  senses.push_back(std::move(entry));
  return true;
}

const std::vector<GlossEntry>* BilingualLexicon::find(std::string_view source) const {
  const auto it = entries_.find(to_lower(source));
  return it == entries_.end() ? nullptr : &it->second;
}

BilingualLexicon parse_lexicon(std::string_view content, const std::string& source_name) {
  BilingualLexicon lex;
  const auto lines = detail::split_lines(content);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string_view line = lines[n];
    const std::size_t line_no = n + 1;
    if (line.empty() || line.front() == '#') continue;
    if (!is_valid_utf8(line)) throw MalformedRow(source_name, line_no, "invalid UTF-8");

    const auto fields = detail::split_fields(line, '\t');
    if (fields.size() != 3) {
      throw MalformedRow(source_name, line_no,
                         "expected 3 tab-separated fields, found " + std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw MalformedRow(source_name, line_no, "empty source or gloss");
    }
    if (!is_tag(fields[2])) {
      throw MalformedRow(source_name, line_no, "unknown POS tag '" + std::string(fields[2]) + "'");
    }
    lex.add(fields[0], GlossEntry{std::string(fields[1]), std::string(fields[2])});
  }
  return lex;
}

BilingualLexicon load_lexicon(const std::filesystem::path& path) {
  return parse_lexicon(detail::read_file(path), path.string());
}

LookupResult lookup(const BilingualLexicon& lex, const Token& token) {
  if (token.kind == TokenKind::Word) {
    if (const auto* senses = lex.find(token.text)) return Glosses{*senses};
  }
  return Passthrough{token};
}

}  // namespace evomt
