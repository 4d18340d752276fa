#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace webmain::unicode {

// Decodes UTF-8 into Unicode scalar values. Invalid byte sequences become
// U+FFFD (one replacement per rejected byte, never consuming valid bytes).
std::vector<char32_t> utf8_decode(std::string_view s);

std::string utf8_encode(const std::vector<char32_t>& cps);
void utf8_append(std::string& out, char32_t cp);

// Number of Unicode scalars in a UTF-8 string.
std::size_t scalar_count(std::string_view s);

// Keeps at most `max_scalars` scalars; second member is true when input was cut.
std::pair<std::string, bool> truncate_scalars(std::string_view s, std::size_t max_scalars);

bool is_cjk_ideograph(char32_t cp);
// Letters/digits that form word tokens (alphabetic scripts + digits).
bool is_word_char(char32_t cp);

// HTML numeric character reference semantics: 0x80..0x9F remap through
// windows-1252, NUL/surrogates/out-of-range become U+FFFD.
char32_t numeric_char_ref(std::uint32_t value);

// --- byte-stream decoding for parse_html ------------------------------------

// Normalizes an encoding label ("UTF-8", "iso-8859-1", ...) to one of the
// supported codec names, or nullopt for labels we cannot handle.
std::optional<std::string> normalize_encoding_label(std::string_view label);

// Converts raw bytes in the named codec to UTF-8. Unmappable input becomes
// U+FFFD. Supported: utf-8, utf-16le, utf-16be, latin-1, windows-1252, ascii.
std::string decode_bytes(std::string_view bytes, const std::string& codec);

// Resolution order: BOM, caller hint, <meta charset>, UTF-8 fallback.
// `meta_scan` receives the head of the byte stream to search for charset decls.
std::string resolve_document_text(std::string_view bytes,
                                  const std::optional<std::string>& encoding_hint);

}  // namespace webmain::unicode
