#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers shared by the parsers and the token normalizers.
namespace deid::text {

// Decodes UTF-8; invalid bytes decode as U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);
void append_utf8(std::string& out, char32_t cp);

// Converts a byte buffer that may carry a UTF-8 or UTF-16 (LE/BE) byte order
// mark into UTF-8. Without a BOM, the input is taken as UTF-8 unless it looks
// like BOM-less UTF-16 (NUL bytes in alternating positions).
std::string to_utf8(std::string_view bytes);

std::string_view trim(std::string_view s) noexcept;
bool is_space(char32_t cp) noexcept;

// Lowercases ASCII, Latin-1 and Latin Extended-A letters.
char32_t to_lower(char32_t cp) noexcept;
std::string lowercase(std::string_view s);
bool is_upper(char32_t cp) noexcept;
bool is_digit(char32_t cp) noexcept;
bool is_punctuation(char32_t cp) noexcept;
// True if s is non-empty and consists only of punctuation and spaces.
bool is_punctuation_only(std::string_view s);

// Byte offset of each code point boundary: result[i] is the byte offset of
// code point i, result.back() == s.size().
std::vector<std::size_t> codepoint_byte_offsets(std::string_view s);

std::vector<std::string> split_whitespace(std::string_view s);

} // namespace deid::text
