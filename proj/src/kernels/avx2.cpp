// Built with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "rankcrank/kernels.hpp"

namespace rankcrank::kernels {
namespace {

void add_mod_avx2(std::uint32_t* __restrict dst, const std::uint32_t* __restrict src, std::size_t n,
                  std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i s = _mm256_add_epi32(a, b);
    // s < 2p < 2^32; if s < p then s - p wraps above s and min keeps s.
    const __m256i r = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  for (; i < n; ++i) {
    const std::uint32_t s = dst[i] + src[i];
    dst[i] = s >= p ? s - p : s;
  }
}

void sub_mod_avx2(std::uint32_t* __restrict dst, const std::uint32_t* __restrict src, std::size_t n,
                  std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_sub_epi32(a, b);
    const __m256i r = _mm256_min_epu32(d, _mm256_add_epi32(d, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  for (; i < n; ++i) {
    const std::uint32_t a = dst[i];
    const std::uint32_t b = src[i];
    dst[i] = a >= b ? a - b : a + (p - b);
  }
}

constexpr KernelTable kAvx2{Isa::avx2, "avx2", &add_mod_avx2, &sub_mod_avx2};

}  // namespace

const KernelTable* detail::avx2_table() { return &kAvx2; }

}  // namespace rankcrank::kernels
