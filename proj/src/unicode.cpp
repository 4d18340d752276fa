#include "webmain/unicode.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace webmain::unicode {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Windows-1252 maps 0x80..0x9F onto printable characters; the rest is latin-1.
constexpr std::array<char32_t, 32> kCp1252High = {
    0x20AC, 0x0081, 0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0x008D, 0x017D, 0x008F,
    0x0090, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0x009D, 0x017E, 0x0178};

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::vector<char32_t> utf8_decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  const std::size_t n = s.size();
  while (i < n) {
    unsigned char b = p[i];
    if (b < 0x80) {
      out.push_back(b);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      unsigned char c = p[i + k];
      if ((c & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (c & 0x3F);
    }
    // Reject overlongs, surrogates and out-of-range values.
    if (ok) {
      if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
          (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
          (cp >= 0xD800 && cp <= 0xDFFF)) {
        ok = false;
      }
    }
    if (ok) {
      out.push_back(cp);
      i += len;
    } else {
      out.push_back(kReplacement);
      ++i;
    }
  }
  return out;
}

void utf8_append(std::string& out, char32_t cp) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacement;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) utf8_append(out, cp);
  return out;
}

std::size_t scalar_count(std::string_view s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if ((b & 0xE0) == 0xC0) len = 2;
    else if ((b & 0xF0) == 0xE0) len = 3;
    else if ((b & 0xF8) == 0xF0) len = 4;
    // Treat malformed tails as single scalars, mirroring utf8_decode.
    if (len > 1) {
      bool ok = i + len <= s.size();
      for (std::size_t k = 1; ok && k < len; ++k)
        ok = (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
      if (!ok) len = 1;
    }
    i += len;
    ++count;
  }
  return count;
}

std::pair<std::string, bool> truncate_scalars(std::string_view s, std::size_t max_scalars) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < s.size() && count < max_scalars) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if ((b & 0xE0) == 0xC0) len = 2;
    else if ((b & 0xF0) == 0xE0) len = 3;
    else if ((b & 0xF8) == 0xF0) len = 4;
    if (len > 1) {
      bool ok = i + len <= s.size();
      for (std::size_t k = 1; ok && k < len; ++k)
        ok = (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
      if (!ok) len = 1;
    }
    i += len;
    ++count;
  }
  return {std::string(s.substr(0, i)), i < s.size()};
}

bool is_cjk_ideograph(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) ||    // unified ideographs
         (cp >= 0x3400 && cp <= 0x4DBF) ||    // extension A
         (cp >= 0xF900 && cp <= 0xFAFF) ||    // compatibility ideographs
         (cp >= 0x20000 && cp <= 0x2A6DF) ||  // extension B
         (cp >= 0x3040 && cp <= 0x30FF);      // kana, segmented per code point
}

bool is_word_char(char32_t cp) {
  if (cp < 0x80)
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (is_cjk_ideograph(cp)) return false;  // handled as single-scalar tokens
  // Alphabetic block ranges that cover the corpus languages we care about.
  return (cp >= 0x00C0 && cp <= 0x024F) ||  // latin supplement + extended
         (cp >= 0x0370 && cp <= 0x03FF) ||  // greek
         (cp >= 0x0400 && cp <= 0x04FF) ||  // cyrillic
         (cp >= 0x0530 && cp <= 0x058F) ||  // armenian
         (cp >= 0x0590 && cp <= 0x05FF) ||  // hebrew
         (cp >= 0x0600 && cp <= 0x06FF) ||  // arabic
         (cp >= 0x0900 && cp <= 0x097F) ||  // devanagari
         (cp >= 0x0E00 && cp <= 0x0E7F) ||  // thai
         (cp >= 0x1100 && cp <= 0x11FF) ||  // hangul jamo
         (cp >= 0xAC00 && cp <= 0xD7AF) ||  // hangul syllables
         (cp >= 0x1E00 && cp <= 0x1EFF) ||  // latin extended additional
         (cp >= 0xFF10 && cp <= 0xFF19) ||  // fullwidth digits
         (cp >= 0xFF21 && cp <= 0xFF3A) || (cp >= 0xFF41 && cp <= 0xFF5A);
}

std::optional<std::string> normalize_encoding_label(std::string_view label) {
  std::string l = ascii_lower(label);
  // strip quotes/whitespace
  auto issp = [](char c) { return c == ' ' || c == '\t' || c == '"' || c == '\''; };
  while (!l.empty() && issp(l.front())) l.erase(l.begin());
  while (!l.empty() && issp(l.back())) l.pop_back();
  if (l == "utf-8" || l == "utf8") return "utf-8";
  if (l == "utf-16" || l == "utf-16le" || l == "utf16") return "utf-16le";
  if (l == "utf-16be") return "utf-16be";
  if (l == "iso-8859-1" || l == "iso8859-1" || l == "latin-1" || l == "latin1" ||
      l == "l1")
    return "latin-1";
  if (l == "windows-1252" || l == "cp1252" || l == "x-cp1252") return "windows-1252";
  if (l == "us-ascii" || l == "ascii") return "ascii";
  return std::nullopt;
}

std::string decode_bytes(std::string_view bytes, const std::string& codec) {
  if (codec == "utf-8" || codec == "ascii") {
    // Decode + re-encode so invalid sequences become U+FFFD.
    return utf8_encode(utf8_decode(bytes));
  }
  std::string out;
  out.reserve(bytes.size());
  if (codec == "latin-1" || codec == "windows-1252") {
    for (unsigned char b : bytes) {
      char32_t cp = b;
      if (codec == "windows-1252" && b >= 0x80 && b <= 0x9F) cp = kCp1252High[b - 0x80];
      utf8_append(out, cp);
    }
    return out;
  }
  if (codec == "utf-16le" || codec == "utf-16be") {
    const bool be = codec == "utf-16be";
    for (std::size_t i = 0; i + 1 < bytes.size(); i += 2) {
      auto unit = [&](std::size_t at) -> char32_t {
        unsigned char a = static_cast<unsigned char>(bytes[at]);
        unsigned char b = static_cast<unsigned char>(bytes[at + 1]);
        return be ? (a << 8 | b) : (b << 8 | a);
      };
      char32_t u = unit(i);
      if (u >= 0xD800 && u <= 0xDBFF && i + 3 < bytes.size()) {
        char32_t lo = unit(i + 2);
        if (lo >= 0xDC00 && lo <= 0xDFFF) {
          utf8_append(out, 0x10000 + ((u - 0xD800) << 10) + (lo - 0xDC00));
          i += 2;
          continue;
        }
      }
      utf8_append(out, (u >= 0xD800 && u <= 0xDFFF) ? kReplacement : u);
    }
    return out;
  }
  // Unknown codec names are filtered out earlier; fall back defensively.
  return utf8_encode(utf8_decode(bytes));
}

namespace {

// Scans the first chunk of a document for `charset=` declarations.
std::optional<std::string> sniff_meta_charset(std::string_view bytes) {
  std::string head = ascii_lower(bytes.substr(0, std::min<std::size_t>(bytes.size(), 2048)));
  std::size_t pos = 0;
  while ((pos = head.find("charset", pos)) != std::string::npos) {
    std::size_t p = pos + 7;
    while (p < head.size() && (head[p] == ' ' || head[p] == '\t')) ++p;
    if (p < head.size() && head[p] == '=') {
      ++p;
      while (p < head.size() && (head[p] == ' ' || head[p] == '\t' || head[p] == '"' || head[p] == '\'')) ++p;
      std::size_t e = p;
      while (e < head.size() &&
             (std::isalnum(static_cast<unsigned char>(head[e])) || head[e] == '-' || head[e] == '_'))
        ++e;
      if (e > p) {
        if (auto norm = normalize_encoding_label(head.substr(p, e - p))) return norm;
      }
    }
    pos += 7;
  }
  return std::nullopt;
}

}  // namespace

std::string resolve_document_text(std::string_view bytes,
                                  const std::optional<std::string>& encoding_hint) {
  // BOM wins over everything.
  if (bytes.size() >= 3 && static_cast<unsigned char>(bytes[0]) == 0xEF &&
      static_cast<unsigned char>(bytes[1]) == 0xBB &&
      static_cast<unsigned char>(bytes[2]) == 0xBF)
    return decode_bytes(bytes.substr(3), "utf-8");
  if (bytes.size() >= 2) {
    unsigned char b0 = static_cast<unsigned char>(bytes[0]);
    unsigned char b1 = static_cast<unsigned char>(bytes[1]);
    if (b0 == 0xFF && b1 == 0xFE) return decode_bytes(bytes.substr(2), "utf-16le");
    if (b0 == 0xFE && b1 == 0xFF) return decode_bytes(bytes.substr(2), "utf-16be");
  }
  if (encoding_hint) {
    if (auto norm = normalize_encoding_label(*encoding_hint))
      return decode_bytes(bytes, *norm);
  }
  if (auto meta = sniff_meta_charset(bytes)) return decode_bytes(bytes, *meta);
  return decode_bytes(bytes, "utf-8");
}

}  // namespace webmain::unicode
