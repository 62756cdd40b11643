#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rankcrank/laurent.hpp"
#include "rankcrank/qseries.hpp"

namespace rankcrank {

// Largest n accepted by the enumeration oracle unless a caller raises it.
inline constexpr int kDefaultEnumerationBound = 60;

// Non-increasing sequence of positive integers; empty is the partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int total() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  // Number of parts equal to 1.
  int ones() const;
  // Number of parts strictly greater than `bound`.
  int parts_above(int bound) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Streams the partitions of n in reverse lexicographic order: (n), (n-1,1), ...
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int n, int bound = kDefaultEnumerationBound);

  // Advances to the next partition; false once the stream is exhausted. The
  // first call yields (n).
  bool next();
  const Partition& current() const { return current_; }

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  Partition current_;
  std::vector<int> parts_;
};

std::vector<Partition> enumerate_partitions(int n, int bound = kDefaultEnumerationBound);

// Largest part minus the number of parts.
int rank_of(const Partition& lambda);
// Largest part if there are no 1s, else (#parts > #ones) - #ones.
int crank_of(const Partition& lambda);

// sum_m N(m,n) z^m and sum_m M(m,n) z^m by direct enumeration. The empty
// partition contributes 1; crank at n = 1 uses the corrected value 1.
LaurentPoly rank_poly_enumerated(int n, int bound = kDefaultEnumerationBound);
LaurentPoly crank_poly_enumerated(int n, int bound = kDefaultEnumerationBound);

// Series-backed rank_n(z) and crank_n(z), cached per process.
LaurentPoly rank_poly(int n);
LaurentPoly crank_poly(int n);
std::shared_ptr<const QSeries> cached_rank_series(int min_order);
std::shared_ptr<const QSeries> cached_crank_series(int min_order);

// N(m,n), M(m,n) from the generating functions.
Integer rank_count(int m, int n);
Integer crank_count(int m, int n);
// Same counts by enumeration (oracle path).
Integer rank_count_enumerated(int m, int n, int bound = kDefaultEnumerationBound);
Integer crank_count_enumerated(int m, int n, int bound = kDefaultEnumerationBound);

// p(0..order) by Euler's pentagonal recurrence.
std::vector<Integer> partition_numbers(int order);
// p_k(0..order) as the k-fold product of the partition series.
std::vector<Integer> colored_counts(int k, int order);
Integer colored_count(int k, int n);

// ell - (ell^2 - 1) / 24; throws InvalidEll unless 24 | ell^2 - 1.
int beta(int ell);
// Least non-negative delta with 24 * delta = k (mod ell); ell coprime to 24.
int delta(int k, int ell);

// A progression p_k(ell n + delta) = 0 (mod ell) from the colored-partition
// congruence theorem, with k + h = ell * t.
struct CongruenceCase {
  int k;
  int h;
  int ell;
  int t;
  int delta;

  // Validates k + h = ell t, ell a prime >= 5 and the (h, ell) clause; throws
  // InvalidCase otherwise.
  static CongruenceCase make(int k, int h, int ell);
  // Which clause (1, 2 or 3) an (h, ell) pair satisfies.
  static std::optional<int> clause(int h, int ell);

  friend bool operator==(const CongruenceCase&, const CongruenceCase&) = default;
};

// Every valid case with 1 <= k <= k_max, ordered by (k, h, ell).
std::vector<CongruenceCase> congruence_cases(int k_max);

// rank_{ell n + beta}(z) + z^(N-2) - z^(N-1) + z^(2-N) - z^(1-N), N = ell n + beta; ell in {5, 7}.
LaurentPoly modified_rank_poly(int ell, int n);
// crank_N(z) + z^(N-ell) - z^N + z^(ell-N) - z^(-N), N = ell n + beta; ell in {5, 7, 11}.
LaurentPoly modified_crank_poly(int ell, int n);

}  // namespace rankcrank
