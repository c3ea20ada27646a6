#include "evomt/tokenizer.hpp"

#include "evomt/unicode.hpp"

namespace evomt {

namespace {

bool is_terminator(char32_t cp) { return cp == U'.' || cp == U'?' || cp == U'!'; }

std::string_view trim(std::string_view text) {
  const auto cps = decode_utf8(text);
  std::size_t first = 0;
  while (first < cps.size() && classify_code_point(cps[first].value) == CharClass::Space) ++first;
  if (first == cps.size()) return {};
  std::size_t last = cps.size();
  while (classify_code_point(cps[last - 1].value) == CharClass::Space) --last;
  const std::size_t begin = cps[first].offset;
  const std::size_t end = cps[last - 1].offset + cps[last - 1].length;
  return text.substr(begin, end - begin);
}

TokenKind kind_of(CharClass c) {
  switch (c) {
    case CharClass::Digit:
      return TokenKind::Digit;
    case CharClass::Word:
      return TokenKind::Word;
    default:
      return TokenKind::Sign;
  }
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word:
      return "word";
    case TokenKind::Digit:
      return "digit";
    case TokenKind::Sign:
      return "sign";
  }
  return "?";
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  const auto cps = decode_utf8(text);
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    const auto piece = trim(text.substr(start, end - start));
    if (!piece.empty()) sentences.emplace_back(piece);
    start = end;
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (!is_terminator(cps[i].value)) continue;
    const bool at_end = i + 1 == cps.size();
    if (at_end || classify_code_point(cps[i + 1].value) == CharClass::Space) {
      flush(cps[i].offset + cps[i].length);
    }
  }
  flush(text.size());
  return sentences;
}

std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<Token> tokens;
  const auto cps = decode_utf8(sentence);
  std::size_t i = 0;
  while (i < cps.size()) {
    const CharClass cls = classify_code_point(cps[i].value);
    if (cls == CharClass::Space) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    if (cls != CharClass::Sign) {
      while (j < cps.size() && classify_code_point(cps[j].value) == cls) ++j;
    }
    const std::size_t begin = cps[i].offset;
    const std::size_t end = cps[j - 1].offset + cps[j - 1].length;
    tokens.push_back({std::string(sentence.substr(begin, end - begin)), kind_of(cls)});
    i = j;
  }
  return tokens;
}

std::optional<TokenKind> classify_token(std::string_view text) {
  const auto cps = decode_utf8(text);
  if (cps.empty()) return std::nullopt;
  const CharClass cls = classify_code_point(cps.front().value);
  if (cls == CharClass::Space) return std::nullopt;
  for (const auto& cp : cps) {
    if (classify_code_point(cp.value) != cls) return std::nullopt;
  }
  return kind_of(cls);
}

}  // namespace evomt
