#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankcrank/parallel.hpp"
#include "rankcrank/report.hpp"

namespace rankcrank {

inline constexpr std::uint64_t kDefaultSeed = 20241016;

// Range overrides for run_claim. Unset fields take the per-claim default
// listed in claim_catalog().
struct ClaimOptions {
  std::optional<int> n_lo;
  std::optional<int> n_max;
  std::optional<int> n_hi;
  std::optional<int> k_lo;
  std::optional<int> k_max;
  std::optional<int> m_max;
  std::optional<int> samples;
  // Single-case selection for thm1.5-A/B and cor3.5.
  std::optional<int> k;
  std::optional<int> h;
  std::optional<int> ell;
  std::optional<std::string> family;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = default_threads();
};

struct ClaimInfo {
  std::string id;
  std::string summary;
  std::string defaults;
  // Proven statements must pass; the rest are scans.
  bool proven = false;
};

const std::vector<ClaimInfo>& claim_catalog();
bool is_known_claim(const std::string& id);

// Throws std::invalid_argument for an unknown id.
Report run_claim(const std::string& id, const ClaimOptions& options);

}  // namespace rankcrank
