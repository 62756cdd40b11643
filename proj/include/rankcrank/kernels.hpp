#pragma once

// Modular vector kernels behind the residue-number-system series engine.
//
// Every kernel works on residues in [0, p) with p < 2^31, so a lane-wise sum
// or difference never leaves 32 bits and a single unsigned min folds it back
// into range. The scalar table is the reference; SIMD tables must agree with
// it bit for bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace rankcrank::kernels {

enum class Isa { scalar, avx2, neon };

using BinaryKernel = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p);

struct KernelTable {
  Isa isa;
  std::string_view name;
  // dst[i] = (dst[i] + src[i]) mod p
  BinaryKernel add_mod;
  // dst[i] = (dst[i] - src[i]) mod p
  BinaryKernel sub_mod;
};

inline constexpr std::uint32_t kMaxModulus = 1u << 31;

const KernelTable& scalar_table();

// ISAs compiled into this binary and usable on the running CPU.
std::vector<Isa> available_isas();
bool is_available(Isa isa);
const KernelTable& table_for(Isa isa);

// The table used by the series engine. Defaults to the widest available ISA;
// RANKCRANK_ISA=scalar|avx2|neon in the environment overrides the default.
const KernelTable& active();
void select(Isa isa);

std::string_view to_string(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

namespace detail {
// Defined only in the translation units built for the matching ISA.
const KernelTable* avx2_table();
const KernelTable* neon_table();
}  // namespace detail

}  // namespace rankcrank::kernels
