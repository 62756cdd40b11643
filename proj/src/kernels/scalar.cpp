#include "rankcrank/kernels.hpp"

namespace rankcrank::kernels {
namespace {

void add_mod_scalar(std::uint32_t* __restrict dst, const std::uint32_t* __restrict src, std::size_t n,
                    std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t s = dst[i] + src[i];
    dst[i] = s >= p ? s - p : s;
  }
}

void sub_mod_scalar(std::uint32_t* __restrict dst, const std::uint32_t* __restrict src, std::size_t n,
                    std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t a = dst[i];
    const std::uint32_t b = src[i];
    dst[i] = a >= b ? a - b : a + (p - b);
  }
}

constexpr KernelTable kScalar{Isa::scalar, "scalar", &add_mod_scalar, &sub_mod_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace rankcrank::kernels
