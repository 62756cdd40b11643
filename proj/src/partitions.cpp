#include "rankcrank/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "rankcrank/cyclotomic.hpp"
#include "rankcrank/errors.hpp"

namespace rankcrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
  }
}

int Partition::total() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::ones() const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1)); }

int Partition::parts_above(int bound) const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [bound](int p) { return p > bound; }));
}

PartitionGenerator::PartitionGenerator(int n, int bound) : n_(n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  if (n > bound) {
    throw BoundExceeded("enumeration of partitions of " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(bound));
  }
}

bool PartitionGenerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ > 0) parts_.assign(1, n_);
    current_ = Partition(parts_);
    return true;
  }
  // Rightmost part above 1; everything after it is a run of 1s.
  auto it = std::find_if(parts_.rbegin(), parts_.rend(), [](int p) { return p > 1; });
  if (it == parts_.rend()) {
    done_ = true;
    return false;
  }
  const auto i = static_cast<std::size_t>(parts_.rend() - it - 1);
  int remaining = static_cast<int>(parts_.size() - i - 1) + 1;
  const int v = --parts_[i];
  parts_.resize(i + 1);
  while (remaining >= v) {
    parts_.push_back(v);
    remaining -= v;
  }
  if (remaining > 0) parts_.push_back(remaining);
  current_ = Partition(parts_);
  return true;
}

std::vector<Partition> enumerate_partitions(int n, int bound) {
  std::vector<Partition> out;
  PartitionGenerator gen(n, bound);
  while (gen.next()) out.push_back(gen.current());
  return out;
}

int rank_of(const Partition& lambda) {
  if (lambda.empty()) throw EmptyPartition();
  return lambda.largest() - lambda.length();
}

int crank_of(const Partition& lambda) {
  if (lambda.empty()) throw EmptyPartition();
  const int omega = lambda.ones();
  if (omega == 0) return lambda.largest();
  return lambda.parts_above(omega) - omega;
}

namespace {

template <class Statistic>
LaurentPoly enumerate_statistic(int n, int bound, Statistic stat) {
  PartitionGenerator gen(n, bound);
  if (n == 0) return LaurentPoly::constant(1);
  std::vector<Integer> counts(2 * static_cast<std::size_t>(n) + 1);
  while (gen.next()) ++counts[static_cast<std::size_t>(stat(gen.current()) + n)];
  return LaurentPoly(-n, std::move(counts));
}

struct SeriesCache {
  std::mutex mutex;
  std::shared_ptr<const QSeries> series;
};

template <class Build>
std::shared_ptr<const QSeries> cached(SeriesCache& cache, int min_order, Build build) {
  if (min_order > kMaxSeriesOrder) {
    throw BoundExceeded("series order " + std::to_string(min_order) + " exceeds the limit " +
                        std::to_string(kMaxSeriesOrder));
  }
  std::lock_guard lock(cache.mutex);
  if (!cache.series || cache.series->order() < min_order) {
    int order = std::max(min_order, kDefaultOrder);
    if (cache.series) order = std::max(order, std::min(2 * cache.series->order(), kMaxSeriesOrder));
    cache.series = std::make_shared<const QSeries>(build(order));
  }
  return cache.series;
}

}  // namespace

LaurentPoly rank_poly_enumerated(int n, int bound) { return enumerate_statistic(n, bound, rank_of); }

LaurentPoly crank_poly_enumerated(int n, int bound) {
  if (n == 1) {
    PartitionGenerator gen(n, bound);  // bound check only
    return LaurentPoly::constant(1);
  }
  return enumerate_statistic(n, bound, crank_of);
}

std::shared_ptr<const QSeries> cached_rank_series(int min_order) {
  static SeriesCache cache;
  return cached(cache, min_order, rank_series);
}

std::shared_ptr<const QSeries> cached_crank_series(int min_order) {
  static SeriesCache cache;
  return cached(cache, min_order, crank_series_corrected);
}

LaurentPoly rank_poly(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  return (*cached_rank_series(n))[n];
}

LaurentPoly crank_poly(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  return (*cached_crank_series(n))[n];
}

Integer rank_count(int m, int n) { return rank_poly(n).coefficient(m); }
Integer crank_count(int m, int n) { return crank_poly(n).coefficient(m); }

Integer rank_count_enumerated(int m, int n, int bound) { return rank_poly_enumerated(n, bound).coefficient(m); }
Integer crank_count_enumerated(int m, int n, int bound) { return crank_poly_enumerated(n, bound).coefficient(m); }

std::vector<Integer> partition_numbers(int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  std::vector<Integer> p(static_cast<std::size_t>(order) + 1);
  p[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int g2 = k * (3 * k + 1) / 2;
      Integer term = p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

std::vector<Integer> colored_counts(int k, int order) {
  if (k < 0) throw std::invalid_argument("number of colours must be non-negative");
  const auto p = partition_numbers(order);
  std::vector<Integer> out(p.size());
  out[0] = 1;
  for (int c = 0; c < k; ++c) {
    std::vector<Integer> next(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        mpz_addmul(next[n].get_mpz_t(), out[i].get_mpz_t(), p[n - i].get_mpz_t());
      }
    }
    out = std::move(next);
  }
  return out;
}

Integer colored_count(int k, int n) { return colored_counts(k, n).back(); }

int beta(int ell) {
  if (ell < 2 || (static_cast<long>(ell) * ell - 1) % 24 != 0) {
    throw InvalidEll("beta needs 24 | ell^2 - 1, got ell = " + std::to_string(ell));
  }
  return ell - static_cast<int>((static_cast<long>(ell) * ell - 1) / 24);
}

int delta(int k, int ell) {
  if (ell < 2 || ell % 2 == 0 || ell % 3 == 0) {
    throw InvalidEll("delta needs ell coprime to 24, got " + std::to_string(ell));
  }
  const int target = ((k % ell) + ell) % ell;
  for (int d = 0; d < ell; ++d) {
    if ((24L * d) % ell == target) return d;
  }
  throw InvalidEll("no delta for ell = " + std::to_string(ell));
}

std::optional<int> CongruenceCase::clause(int h, int ell) {
  if ((h == 4 || h == 8 || h == 14) && ell % 3 == 2) return 1;
  if ((h == 6 || h == 10) && ell % 4 == 3) return 2;
  if (h == 26 && ell % 12 == 11) return 3;
  return std::nullopt;
}

CongruenceCase CongruenceCase::make(int k, int h, int ell) {
  const std::string what = "(k=" + std::to_string(k) + ", h=" + std::to_string(h) + ", ell=" + std::to_string(ell) + ")";
  if (k < 1 || h < 1) throw InvalidCase("k and h must be positive " + what);
  if (ell < 5 || !is_prime(ell)) throw InvalidCase("ell must be a prime >= 5 " + what);
  if ((k + h) % ell != 0) throw InvalidCase("k + h is not a multiple of ell " + what);
  if (!clause(h, ell)) throw InvalidCase("(h, ell) satisfies no congruence clause " + what);
  return CongruenceCase{k, h, ell, (k + h) / ell, rankcrank::delta(k, ell)};
}

std::vector<CongruenceCase> congruence_cases(int k_max) {
  std::vector<CongruenceCase> out;
  for (int k = 1; k <= k_max; ++k) {
    for (int h : {4, 6, 8, 10, 14, 26}) {
      for (int ell = 5; ell <= k + h; ++ell) {
        if (!is_prime(ell) || (k + h) % ell != 0 || !CongruenceCase::clause(h, ell)) continue;
        out.push_back(CongruenceCase::make(k, h, ell));
      }
    }
  }
  return out;
}

LaurentPoly modified_rank_poly(int ell, int n) {
  if (ell != 5 && ell != 7) throw InvalidEll("modified rank is defined for ell in {5, 7}");
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const int big = ell * n + beta(ell);
  LaurentPoly f = rank_poly(big);
  f += LaurentPoly::monomial(1, big - 2);
  f -= LaurentPoly::monomial(1, big - 1);
  f += LaurentPoly::monomial(1, 2 - big);
  f -= LaurentPoly::monomial(1, 1 - big);
  return f;
}

LaurentPoly modified_crank_poly(int ell, int n) {
  if (ell != 5 && ell != 7 && ell != 11) throw InvalidEll("modified crank is defined for ell in {5, 7, 11}");
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const int big = ell * n + beta(ell);
  LaurentPoly f = crank_poly(big);
  f += LaurentPoly::monomial(1, big - ell);
  f -= LaurentPoly::monomial(1, big);
  f += LaurentPoly::monomial(1, ell - big);
  f -= LaurentPoly::monomial(1, -big);
  return f;
}

}  // namespace rankcrank
