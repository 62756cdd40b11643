#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rankcrank/kernels.hpp"

namespace rankcrank::kernels {

#if !defined(RANKCRANK_HAVE_AVX2)
const KernelTable* detail::avx2_table() { return nullptr; }
#endif
#if !defined(RANKCRANK_HAVE_NEON)
const KernelTable* detail::neon_table() { return nullptr; }
#endif

namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(RANKCRANK_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(RANKCRANK_HAVE_NEON)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* compiled_table(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_table();
    case Isa::avx2:
      return detail::avx2_table();
    case Isa::neon:
      return detail::neon_table();
  }
  return nullptr;
}

const KernelTable* initial_table() {
  if (const char* forced = std::getenv("RANKCRANK_ISA")) {
    const auto isa = parse_isa(forced);
    if (isa && is_available(*isa)) return &table_for(*isa);
  }
  const auto isas = available_isas();
  return &table_for(isas.back());
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::neon, Isa::avx2}) {
    if (compiled_table(isa) != nullptr && cpu_has(isa)) out.push_back(isa);
  }
  return out;
}

bool is_available(Isa isa) { return compiled_table(isa) != nullptr && cpu_has(isa); }

const KernelTable& table_for(Isa isa) {
  if (!is_available(isa)) throw std::invalid_argument("kernel ISA not available: " + std::string(to_string(isa)));
  return *compiled_table(isa);
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) { current().store(&table_for(isa), std::memory_order_release); }

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  return std::nullopt;
}

}  // namespace rankcrank::kernels
