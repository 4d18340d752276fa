// AVX2 kernel variants. This translation unit is compiled with -mavx2 and the
// functions are only reached after the runtime CPUID check in dispatch.cpp.
#include "webmain/kernels.hpp"

#if defined(WEBMAIN_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <vector>

namespace webmain::kernels {

// Anti-diagonal Levenshtein: every cell on diagonal d = i+j depends only on
// diagonals d-1 and d-2, so a diagonal's cells are independent and can be
// computed 8 at a time with epi32 min/cmpeq.
std::size_t levenshtein_avx2(std::span<const char32_t> a, std::span<const char32_t> b) {
  if (a.size() > b.size()) std::swap(a, b);
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  if (m == 0) return static_cast<std::size_t>(n);
  if (m < 16) return levenshtein_scalar(a, b);

  std::vector<int32_t> d2(m + 1), d1(m + 1), d0(m + 1);
  std::vector<int32_t> arow(m), brev(n);
  for (int i = 0; i < m; ++i) arow[i] = static_cast<int32_t>(a[i]);
  for (int k = 0; k < n; ++k) brev[k] = static_cast<int32_t>(b[n - 1 - k]);

  d2[0] = 0;   // dp[0][0]
  d1[0] = 1;   // dp[0][1]
  d1[1] = 1;   // dp[1][0]

  const __m256i ones = _mm256_set1_epi32(1);
  for (int d = 2; d <= m + n; ++d) {
    const int lo = std::max(1, d - n);
    const int hi = std::min(m, d - 1);
    if (d <= n) d0[0] = d;  // dp[0][d]
    if (d <= m) d0[d] = d;  // dp[d][0]
    const int boff = n - d;  // b[j-1] = brev[boff + i]
    int i = lo;
    for (; i + 8 <= hi + 1; i += 8) {
      __m256i up = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&d1[i - 1]));
      __m256i left = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&d1[i]));
      __m256i diag = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&d2[i - 1]));
      __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&arow[i - 1]));
      __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&brev[boff + i]));
      // cmpeq yields -1 on equality, so 1 + eq is the substitution cost.
      __m256i cost = _mm256_add_epi32(ones, _mm256_cmpeq_epi32(av, bv));
      __m256i best = _mm256_add_epi32(_mm256_min_epi32(up, left), ones);
      best = _mm256_min_epi32(best, _mm256_add_epi32(diag, cost));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(&d0[i]), best);
    }
    for (; i <= hi; ++i) {
      int32_t cost = (arow[i - 1] == brev[boff + i]) ? 0 : 1;
      d0[i] = std::min(std::min(d1[i - 1], d1[i]) + 1, d2[i - 1] + cost);
    }
    std::swap(d2, d1);
    std::swap(d1, d0);
  }
  return static_cast<std::size_t>(d1[m]);
}

std::size_t scan_to_class_avx2(const char* s, std::size_t len, std::size_t start,
                               bool want_ws) {
  std::size_t i = start;
  const __m256i sp = _mm256_set1_epi8(' ');
  const __m256i tab = _mm256_set1_epi8('\t');
  const __m256i nl = _mm256_set1_epi8('\n');
  const __m256i cr = _mm256_set1_epi8('\r');
  const __m256i ff = _mm256_set1_epi8('\f');
  const __m256i vt = _mm256_set1_epi8('\v');
  while (i + 32 <= len) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
    __m256i m = _mm256_or_si256(_mm256_cmpeq_epi8(v, sp), _mm256_cmpeq_epi8(v, tab));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi8(v, nl));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi8(v, cr));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi8(v, ff));
    m = _mm256_or_si256(m, _mm256_cmpeq_epi8(v, vt));
    uint32_t mask = static_cast<uint32_t>(_mm256_movemask_epi8(m));
    if (!want_ws) mask = ~mask;
    if (mask) return i + static_cast<std::size_t>(__builtin_ctz(mask));
    i += 32;
  }
  return scan_to_class_scalar(s, len, i, want_ws);
}

}  // namespace webmain::kernels

#endif  // WEBMAIN_HAVE_AVX2
