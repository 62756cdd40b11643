#include <arm_neon.h>

#include "rankcrank/kernels.hpp"

namespace rankcrank::kernels {
namespace {

void add_mod_neon(std::uint32_t* __restrict dst, const std::uint32_t* __restrict src, std::size_t n,
                  std::uint32_t p) {
  const uint32x4_t vp = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t s = vaddq_u32(vld1q_u32(dst + i), vld1q_u32(src + i));
    vst1q_u32(dst + i, vminq_u32(s, vsubq_u32(s, vp)));
  }
  for (; i < n; ++i) {
    const std::uint32_t s = dst[i] + src[i];
    dst[i] = s >= p ? s - p : s;
  }
}

void sub_mod_neon(std::uint32_t* __restrict dst, const std::uint32_t* __restrict src, std::size_t n,
                  std::uint32_t p) {
  const uint32x4_t vp = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t d = vsubq_u32(vld1q_u32(dst + i), vld1q_u32(src + i));
    vst1q_u32(dst + i, vminq_u32(d, vaddq_u32(d, vp)));
  }
  for (; i < n; ++i) {
    const std::uint32_t a = dst[i];
    const std::uint32_t b = src[i];
    dst[i] = a >= b ? a - b : a + (p - b);
  }
}

constexpr KernelTable kNeon{Isa::neon, "neon", &add_mod_neon, &sub_mod_neon};

}  // namespace

const KernelTable* detail::neon_table() { return &kNeon; }

}  // namespace rankcrank::kernels
