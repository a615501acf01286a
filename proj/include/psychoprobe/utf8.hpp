#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace psychoprobe::utf8 {

struct Codepoint {
  char32_t value;
  std::size_t byte_offset; // offset of the first byte in the source string
  std::size_t byte_length;
};

// Decodes UTF-8; invalid byte sequences yield U+FFFD, one replacement per
// offending byte, so arbitrary byte input never throws.
std::vector<Codepoint> decode(std::string_view text);

std::string encode(char32_t cp);

// CJK ideographs plus kana; these scripts get per-codepoint tokenization.
bool is_cjk(char32_t cp);

// letters/digits of the scripts the questionnaire banks use (Latin, Cyrillic,
// Greek, Hangul) plus CJK; anything else is treated as a separator
bool is_word_char(char32_t cp);

// full-width ASCII forms (U+FF01..U+FF5E) fold to their ASCII counterparts;
// returns cp unchanged otherwise
char32_t fold_fullwidth(char32_t cp);

bool is_ascii_digit(char32_t cp);

// lowercases Latin (ASCII, Latin-1, Extended-A), Greek, and Cyrillic;
// caseless scripts pass through
char32_t to_lower(char32_t cp);

std::string lowercase(std::string_view text);

} // namespace psychoprobe::utf8
