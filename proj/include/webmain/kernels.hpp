#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

// Scalar reference kernels plus AVX2 variants for the data-parallel inner
// loops (edit-distance DP and whitespace scanning). The active backend is
// picked once at startup from CPUID and can be overridden with the
// WEBMAIN_KERNEL environment variable ("scalar", "avx2", "auto") or
// set_backend(). Scalar and AVX2 variants are equivalence-tested.
namespace webmain::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
// Returns false if the requested backend is unsupported on this CPU.
bool set_backend(Backend b);
bool cpu_has_avx2();
const char* backend_name(Backend b);

// Unit-cost Levenshtein distance over code points.
std::size_t levenshtein(std::span<const char32_t> a, std::span<const char32_t> b);
std::size_t levenshtein_scalar(std::span<const char32_t> a, std::span<const char32_t> b);
#if defined(WEBMAIN_HAVE_AVX2)
std::size_t levenshtein_avx2(std::span<const char32_t> a, std::span<const char32_t> b);
#endif

// Index of the first byte at/after `start` whose ASCII-whitespace-ness equals
// `want_ws`; returns len when no such byte exists. Multi-byte UTF-8 units never
// match (all their bytes have the high bit set).
std::size_t scan_to_class(const char* s, std::size_t len, std::size_t start, bool want_ws);
std::size_t scan_to_class_scalar(const char* s, std::size_t len, std::size_t start, bool want_ws);
#if defined(WEBMAIN_HAVE_AVX2)
std::size_t scan_to_class_avx2(const char* s, std::size_t len, std::size_t start, bool want_ws);
#endif

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Collapses runs of ASCII whitespace to single spaces and trims the ends.
// Built on scan_to_class so it rides the dispatched kernel.
std::string collapse_whitespace(std::string_view s);

}  // namespace webmain::kernels
