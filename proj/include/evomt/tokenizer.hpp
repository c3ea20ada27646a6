#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evomt {

enum class TokenKind { Word, Digit, Sign };

std::string_view to_string(TokenKind kind);

struct Token {
  std::string text;
  TokenKind kind = TokenKind::Word;

  bool operator==(const Token&) const = default;
};

// Breaks after '.', '?' or '!' when followed by whitespace or end of input.
// Each sentence is trimmed and keeps its terminator; blank pieces are dropped.
std::vector<std::string> split_sentences(std::string_view text);

// Whitespace separates; every sign character is its own token; maximal runs of
// decimal digits and of word characters form Digit and Word tokens.
std::vector<Token> tokenize(std::string_view sentence);

// Kind of a whole token text, or nullopt when empty, containing whitespace or
// mixing character classes.
std::optional<TokenKind> classify_token(std::string_view text);

}  // namespace evomt
