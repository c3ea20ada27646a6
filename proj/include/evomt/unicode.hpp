#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evomt {

enum class CharClass { Space, Digit, Word, Sign };

// Word covers letters, combining marks, non-decimal numbers and the
// zero-width (non-)joiners that appear inside Sinhala conjuncts. Digit is
// exactly the decimal-digit category.
CharClass classify_code_point(char32_t cp);

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset into the source
  std::size_t length;  // encoded length in bytes
};

// Ill-formed sequences decode to U+FFFD one byte at a time.
std::vector<CodePoint> decode_utf8(std::string_view text);

bool is_valid_utf8(std::string_view text);

// Simple per-code-point lower-casing; scripts without case pass through.
std::string to_lower(std::string_view text);

}  // namespace evomt
