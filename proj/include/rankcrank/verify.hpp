#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankcrank/cyclotomic.hpp"
#include "rankcrank/parallel.hpp"
#include "rankcrank/partitions.hpp"
#include "rankcrank/qseries.hpp"
#include "rankcrank/report.hpp"

namespace rankcrank {

enum class Family { A, B };

std::string to_string(Family f);
Family parse_family(const std::string& s);

// Slices below these exponents are outside the positivity statements for the
// A and B families.
inline constexpr int kFamilyAOnset = 15;
inline constexpr int kFamilyBOnset = 24;
int family_onset(Family f);
CrankSpec family_spec(Family f, int k);

// Modified cranks are unimodal from this exponent on.
inline constexpr int kCrankUnimodalOnset = 44;

// Rank inequality threshold: N(m,n) >= N(m+1,n) is expected from here on.
inline constexpr int kRankInequalityOnset = 39;

// Modified rank quotients by Phi_ell for 0 <= n <= n_max, ell in {5, 7}.
// Symmetry and unimodality of the modified polynomial are recorded as notes.
Report verify_stanton_rank(int ell, int n_max, unsigned threads = default_threads());

// crank_{5n+4} / Phi_5(z^2) is a non-negative Laurent polynomial and
// z^4 times it is symmetric.
Report verify_stanton_crank2(int n_max, unsigned threads = default_threads());

// Modified crank: divisible by Phi_ell with non-negative quotient for every n,
// unimodal once ell n + beta >= kCrankUnimodalOnset; ell in {5, 7, 11}.
Report verify_stanton_crank3(int ell, int n_max, unsigned threads = default_threads());

// N(m,n) >= N(m+1,n) for 0 <= m <= n-3 and n in [n_lo, n_hi]. The m = n-2
// boundary fails for every n (only the partition (n) has rank n-1) and is
// left to the modified rank. Exponents below both n_lo and the onset are
// scanned too and reported as notes.
Report verify_rank_unimodality(int n_lo, int n_hi, unsigned threads = default_threads());

// 5 M(2k+j, 10; 5n+4) = M(j, 2; 5n+4) for 0 <= k <= 4, j in {0, 1}.
Report verify_crank_mod10(int n_max, unsigned threads = default_threads());

// ell | p_k(ell n + delta) for 0 <= n <= n_max.
Report verify_colored_congruence(const CongruenceCase& c, int n_max);
// Every congruence case with k <= k_max.
Report verify_colored_congruences(int k_max, int n_max, unsigned threads = default_threads());

// Throws HypothesisViolation when (family, h, k parity) is outside the
// positivity statement.
void check_colored_hypotheses(Family family, const CongruenceCase& c);

// For [q^(ell n + delta)] of the family series, 0 <= n <= n_max: divisibility
// by Phi_ell and symmetry for every n, quotient non-negativity and slice
// unimodality from the family onset on. Non-unimodal slices are conditional
// counterexamples, as is a negative quotient of a non-unimodal slice.
Report verify_colored_stanton(Family family, const CongruenceCase& c, int n_max,
                              unsigned threads = default_threads());
// All cases with k <= k_max that satisfy the family hypotheses, checking
// exponents up to max_exponent.
Report verify_colored_stanton_sweep(Family family, int k_max, int max_exponent,
                                    unsigned threads = default_threads());

// Phi_ell | [q^N] of the spec's series for every N = delta (mod ell) with
// N <= max_exponent. No hypotheses on the spec.
Report verify_colored_divisibility(const CrankSpec& spec, int ell, int delta, int max_exponent,
                                   unsigned threads = default_threads());

// M(n-k, n) is constant for 2k <= n <= n_max and each 1 <= k <= k_max, plus
// M(n-1, n) = 0 and M(n, n) = 1 for 2 <= n <= n_max.
Report verify_crank_tail(int k_max, int n_max);

// (1/(q;q)_inf) sum_{j>=1} (-1)^(j-1) q^(j(j-1)/2 + m j) against
// sum_n sum_{k>=m} M(k,n) q^n of the uncorrected product, through q^order
// for 1 <= m <= m_max. Pointwise disagreement with M(m,n) is noted.
Report verify_crank_summation(int m_max, int order);

// M(N-ell-1, N) - M(N-ell, N) - 1 >= 0 at N = 22 ell + beta, ell in {5, 7, 11}.
Report verify_crank_n22();

// Hat-sum criterion agrees with exact division on random polynomials, for
// Phi_ell(z) (standard) or Phi_ell(-z) (negated), ell in {5, 7, 11}.
Report verify_divisibility_criteria(PhiVariant variant, int samples_per_ell, std::uint64_t seed);

// Symmetric unimodal multiples of Phi_ell have non-negative quotients, over a
// corpus of rank, crank, modified and A_k slices with exponents <= n_max.
Report verify_positive_quotients(int n_max);
// Symmetric, alternately decreasing multiples of Phi_ell(z^2) give symmetric
// non-negative z^(ell-1) f / Phi_ell(z^2), over the same corpus.
Report verify_squared_quotients(int n_max);

struct AsymptoticSample {
  int n = 0;
  int m = 0;
  double gamma = 0.0;
  double predicted = 0.0;
  Integer actual;
  double rel_error = 0.0;
  // |m| exceeds sqrt(n) log(n) / (pi sqrt 6).
  bool out_of_range = false;
};

double asymptotic_window(int n);
// Compares N(m,n) with (gamma/4) sech^2(gamma m / 2) p(n), gamma = pi / sqrt(6n).
std::vector<AsymptoticSample> asymptotic_diagnostic(int n, const std::vector<int>& m_values);

}  // namespace rankcrank
