#ifndef FREQINFL_UNICODE_HPP
#define FREQINFL_UNICODE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace freqinfl::unicode {

/// True iff bytes form well-formed UTF-8.
bool is_valid_utf8(std::string_view bytes);

/// Byte offsets of code point starts, plus a final offset == bytes.size().
/// Input must be valid UTF-8.
std::vector<std::size_t> codepoint_offsets(std::string_view bytes);

/// Number of code points in a valid UTF-8 string.
std::size_t codepoint_count(std::string_view bytes);

/// Byte length of the longest common prefix that ends on a code point
/// boundary in both strings.
std::size_t common_prefix_bytes(std::string_view a, std::string_view b);

/// NFC-normalize a UTF-8 string (ICU). Strings already in NFC pass through
/// unchanged.
std::string nfc(std::string_view utf8);

/// Full Unicode lowercase (root locale).
std::string to_lower(std::string_view utf8);

} // namespace freqinfl::unicode

#endif // FREQINFL_UNICODE_HPP
