#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankcrank/parallel.hpp"
#include "rankcrank/qseries.hpp"
#include "rankcrank/report.hpp"

namespace rankcrank {

// All C_k(a_1 > ... > a_s) with a_1 <= k, s = crank_arity(k), in colex order
// (ordered by a_s, then a_(s-1), ...): (2,1), (3,1), (3,2) for k = 3.
std::vector<CrankSpec> crank_space(int k);

struct SearchResult {
  CrankSpec spec;
  // Minimal m with [q^n] unimodal for all m < n < n_hi. Absent when the only
  // such m is n_hi - 1.
  std::optional<int> threshold;
  int n_hi = 0;
  bool eventually_unimodal = false;
  // Largest n < n_hi with a non-unimodal slice, 0 if none.
  int largest_non_unimodal = 0;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

SearchResult min_unimodal_threshold(const CrankSpec& spec, int n_hi);

// Results for every spec of crank_space(k), k_lo <= k <= k_hi, in that order.
std::vector<SearchResult> exhaustive_search(int k_lo, int k_hi, int n_hi, unsigned threads = default_threads());

// Eventually unimodal exactly when a_1 - a_2 = 1.
Report check_conjecture_4_2(const std::vector<SearchResult>& results);

// [q^n]A_k unimodal for onset_A <= n < n_hi, and [q^n]B_k (odd k >= 7) for
// onset_B <= n < n_hi. Observed onsets are reported as notes.
Report check_conjecture_1_4(int k_lo, int k_hi, int n_hi, unsigned threads = default_threads());

// "k,a,threshold,n_hi" with "-" for a missing threshold.
std::string search_csv_header();
std::string search_csv_row(const SearchResult& r);
std::string search_csv(const std::vector<SearchResult>& results);

}  // namespace rankcrank
