#include <algorithm>
#include <numeric>
#include <vector>

#include "webmain/kernels.hpp"

namespace webmain::kernels {

// Two-row dynamic program, the reference implementation the SIMD variant is
// checked against.
std::size_t levenshtein_scalar(std::span<const char32_t> a, std::span<const char32_t> b) {
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t m = a.size(), n = b.size();
  if (m == 0) return n;
  std::vector<uint32_t> prev(m + 1), cur(m + 1);
  std::iota(prev.begin(), prev.end(), 0u);
  for (std::size_t j = 1; j <= n; ++j) {
    cur[0] = static_cast<uint32_t>(j);
    const char32_t bj = b[j - 1];
    for (std::size_t i = 1; i <= m; ++i) {
      uint32_t del = prev[i] + 1;
      uint32_t ins = cur[i - 1] + 1;
      uint32_t sub = prev[i - 1] + (a[i - 1] == bj ? 0u : 1u);
      cur[i] = std::min({del, ins, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::size_t scan_to_class_scalar(const char* s, std::size_t len, std::size_t start,
                                 bool want_ws) {
  std::size_t i = start;
  while (i < len && is_ascii_space(s[i]) != want_ws) ++i;
  return i;
}

}  // namespace webmain::kernels
