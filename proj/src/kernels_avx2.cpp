#include "visidim/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define VISIDIM_HAVE_X86 1
#endif

namespace visidim::kernels::avx2 {

#ifdef VISIDIM_HAVE_X86

bool available() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) void fill_min(std::int32_t* env, std::size_t n, std::int32_t v) {
  const __m256i vv = _mm256_set1_epi32(v);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    auto* p = reinterpret_cast<__m256i*>(env + i);
    _mm256_storeu_si256(p, _mm256_min_epi32(_mm256_loadu_si256(p), vv));
  }
  for (; i < n; ++i) env[i] = env[i] < v ? env[i] : v;
}

__attribute__((target("avx2"))) bool any_greater(const std::int32_t* env, std::size_t n, std::int32_t v) {
  const __m256i vv = _mm256_set1_epi32(v);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const auto* p = reinterpret_cast<const __m256i*>(env + i);
    __m256i m = _mm256_cmpgt_epi32(_mm256_loadu_si256(p), vv);
    m = _mm256_or_si256(m, _mm256_cmpgt_epi32(_mm256_loadu_si256(p + 1), vv));
    m = _mm256_or_si256(m, _mm256_cmpgt_epi32(_mm256_loadu_si256(p + 2), vv));
    m = _mm256_or_si256(m, _mm256_cmpgt_epi32(_mm256_loadu_si256(p + 3), vv));
    if (!_mm256_testz_si256(m, m)) return true;
  }
  for (; i + 8 <= n; i += 8) {
    const __m256i m = _mm256_cmpgt_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(env + i)), vv);
    if (!_mm256_testz_si256(m, m)) return true;
  }
  for (; i < n; ++i) {
    if (env[i] > v) return true;
  }
  return false;
}

// Walk rows bottom-up; a column keeps the first (lowest) row where it is set.
__attribute__((target("avx2"))) void column_lowest(const std::uint8_t* grid, std::size_t rows, std::size_t cols,
                                                   std::int32_t* out) {
  for (std::size_t c = 0; c < cols; ++c) out[c] = kEmpty;
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t r = 0; r < rows; ++r) {
    const std::uint8_t* row = grid + r * cols;
    const __m256i rv = _mm256_set1_epi32(static_cast<std::int32_t>(r));
    const __m256i empty = _mm256_set1_epi32(kEmpty);
    std::size_t c = 0;
    for (; c + 8 <= cols; c += 8) {
      const __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(row + c));
      if (_mm_testz_si128(bytes, bytes)) continue;
      const __m256i wide = _mm256_cvtepu8_epi32(bytes);
      const __m256i set = _mm256_xor_si256(_mm256_cmpeq_epi32(wide, zero), _mm256_set1_epi32(-1));
      auto* p = reinterpret_cast<__m256i*>(out + c);
      const __m256i cur = _mm256_loadu_si256(p);
      const __m256i fresh = _mm256_and_si256(set, _mm256_cmpeq_epi32(cur, empty));
      _mm256_storeu_si256(p, _mm256_blendv_epi8(cur, rv, fresh));
    }
    for (; c < cols; ++c) {
      if (row[c] && out[c] == kEmpty) out[c] = static_cast<std::int32_t>(r);
    }
  }
}

#else

bool available() { return false; }
void fill_min(std::int32_t* env, std::size_t n, std::int32_t v) { scalar::fill_min(env, n, v); }
bool any_greater(const std::int32_t* env, std::size_t n, std::int32_t v) { return scalar::any_greater(env, n, v); }
void column_lowest(const std::uint8_t* grid, std::size_t rows, std::size_t cols, std::int32_t* out) {
  scalar::column_lowest(grid, rows, cols, out);
}

#endif

}  // namespace visidim::kernels::avx2
