#include "webmain/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace webmain::kernels {

bool cpu_has_avx2() {
#if defined(WEBMAIN_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Backend pick_initial() {
  const char* env = std::getenv("WEBMAIN_KERNEL");
  if (env) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::avx2;
    // "auto" or anything unrecognized falls through to detection.
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

Backend g_backend = pick_initial();

}  // namespace

Backend active_backend() { return g_backend; }

bool set_backend(Backend b) {
  if (b == Backend::avx2 && !cpu_has_avx2()) return false;
  g_backend = b;
  return true;
}

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

std::size_t levenshtein(std::span<const char32_t> a, std::span<const char32_t> b) {
#if defined(WEBMAIN_HAVE_AVX2)
  if (g_backend == Backend::avx2) return levenshtein_avx2(a, b);
#endif
  return levenshtein_scalar(a, b);
}

std::size_t scan_to_class(const char* s, std::size_t len, std::size_t start, bool want_ws) {
#if defined(WEBMAIN_HAVE_AVX2)
  if (g_backend == Backend::avx2) return scan_to_class_avx2(s, len, start, want_ws);
#endif
  return scan_to_class_scalar(s, len, start, want_ws);
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = scan_to_class(s.data(), s.size(), 0, false);  // skip leading ws
  while (i < s.size()) {
    std::size_t ws = scan_to_class(s.data(), s.size(), i, true);
    out.append(s.substr(i, ws - i));
    if (ws >= s.size()) break;
    i = scan_to_class(s.data(), s.size(), ws, false);
    if (i < s.size()) out.push_back(' ');
  }
  return out;
}

}  // namespace webmain::kernels
