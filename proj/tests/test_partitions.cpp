#include <doctest.h>

#include "rankcrank/errors.hpp"
#include "rankcrank/partitions.hpp"

using namespace rankcrank;

namespace {

LaurentPoly P(const char* text) { return parse_laurent(text); }

// Independent count of partitions of n with parts <= cap.
long count_capped(int n, int cap) {
  if (n == 0) return 1;
  long total = 0;
  for (int part = std::min(n, cap); part >= 1; --part) total += count_capped(n - part, part);
  return total;
}

}  // namespace

TEST_CASE("enumeration") {
  const auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(9).size() == 30);
  const auto four = enumerate_partitions(4);
  CHECK(four.front() == Partition({4}));
  CHECK(four[1] == Partition({3, 1}));
  CHECK(four.back() == Partition({1, 1, 1, 1}));
  for (int n = 0; n <= 20; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(static_cast<long>(all.size()) == count_capped(n, n));
    for (const auto& lambda : all) CHECK(lambda.total() == n);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i].parts() < all[i - 1].parts());
  }
  CHECK_THROWS_AS(enumerate_partitions(61), BoundExceeded);
  CHECK(enumerate_partitions(61, 61).size() == 1121505);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("rank and crank of single partitions") {
  CHECK(rank_of(Partition({4})) == 3);
  CHECK(rank_of(Partition({2, 1, 1})) == -1);
  CHECK(rank_of(Partition({3, 1})) == 1);
  CHECK(crank_of(Partition({4})) == 4);
  CHECK(crank_of(Partition({3, 1})) == 0);
  CHECK(crank_of(Partition({2, 1, 1})) == -2);
  CHECK_THROWS_AS(rank_of(Partition()), EmptyPartition);
  CHECK_THROWS_AS(crank_of(Partition()), EmptyPartition);
}

TEST_CASE("rank and crank counts") {
  CHECK(rank_count(3, 4) == 1);
  CHECK(rank_count(0, 4) == 1);
  CHECK(rank_count(5, 4) == 0);
  CHECK(crank_count(0, 1) == 1);
  CHECK(crank_count(1, 1) == 0);
  CHECK(crank_count(4, 4) == 1);
  CHECK(crank_count(3, 4) == 0);
  CHECK(rank_poly(0) == P("1"));
  CHECK(crank_poly(0) == P("1"));
  CHECK(crank_poly_enumerated(1) == P("1"));
}

TEST_CASE("counts specialise to p(n) and are symmetric") {
  const auto p = partition_numbers(60);
  for (int n = 0; n <= 60; ++n) {
    CHECK(rank_poly(n).sum() == p[static_cast<std::size_t>(n)]);
    CHECK(crank_poly(n).sum() == p[static_cast<std::size_t>(n)]);
  }
  for (int n = 0; n <= 40; ++n) {
    for (int m = -n; m <= n; ++m) {
      CHECK(rank_count(m, n) == rank_count(-m, n));
      CHECK(crank_count(m, n) == crank_count(-m, n));
    }
  }
  for (int n = 0; n <= 30; ++n) CHECK(p[static_cast<std::size_t>(n)] == count_capped(n, n));
  CHECK(partition_numbers(100)[100] == Integer("190569292"));
  CHECK(partition_numbers(450)[450] > Integer("18446744073709551615"));
}

TEST_CASE("crank extremes and tail constancy") {
  for (int n = 2; n <= 60; ++n) {
    CHECK(crank_count(n - 1, n) == 0);
    CHECK(crank_count(n, n) == 1);
  }
  for (int k = 1; k <= 10; ++k) {
    const auto first = crank_count(k, 2 * k);
    for (int n = 2 * k; n <= 60; ++n) CHECK(crank_count(n - k, n) == first);
  }
}

TEST_CASE("colored counts") {
  CHECK(colored_count(1, 4) == 5);
  CHECK(colored_count(2, 2) == 5);
  for (int k = 0; k <= 6; ++k) CHECK(colored_count(k, 0) == 1);
  // p_2(n) by direct convolution of p with itself
  const auto p = partition_numbers(30);
  const auto p2 = colored_counts(2, 30);
  for (int n = 0; n <= 30; ++n) {
    Integer acc = 0;
    for (int i = 0; i <= n; ++i) acc += p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(n - i)];
    CHECK(p2[static_cast<std::size_t>(n)] == acc);
  }
}

TEST_CASE("beta and delta") {
  CHECK(beta(5) == 4);
  CHECK(beta(7) == 5);
  CHECK(beta(11) == 6);
  CHECK_THROWS_AS(beta(6), InvalidEll);
  CHECK(delta(1, 5) == 4);
  CHECK(delta(1, 7) == 5);
  CHECK(delta(1, 11) == 6);
  for (int ell : {5, 7, 11, 13}) {
    for (int k = 0; k < 30; ++k) {
      const int d = delta(k, ell);
      CHECK(d >= 0);
      CHECK(d < ell);
      CHECK((24 * d - k) % ell == 0);
    }
  }
  CHECK_THROWS_AS(delta(1, 9), InvalidEll);
}

TEST_CASE("congruence cases") {
  const auto c = CongruenceCase::make(1, 4, 5);
  CHECK(c.t == 1);
  CHECK(c.delta == 4);
  CHECK_THROWS_AS(CongruenceCase::make(7, 14, 7), InvalidCase);
  CHECK_THROWS_AS(CongruenceCase::make(4, 7, 11), InvalidCase);
  CHECK_THROWS_AS(CongruenceCase::make(2, 4, 5), InvalidCase);
  CHECK(CongruenceCase::clause(26, 11) == 3);
  CHECK(CongruenceCase::clause(6, 7) == 2);
  CHECK_FALSE(CongruenceCase::clause(6, 5).has_value());
  const auto all = congruence_cases(12);
  CHECK_FALSE(all.empty());
  for (const auto& cc : all) {
    CHECK(cc.k <= 12);
    CHECK((cc.k + cc.h) == cc.ell * cc.t);
    CHECK(CongruenceCase::make(cc.k, cc.h, cc.ell) == cc);
  }
  // every valid case divides p_k on its progression
  for (const auto& cc : all) {
    const auto pk = colored_counts(cc.k, cc.ell * 10 + cc.delta);
    for (int n = 0; n <= 10; ++n) CHECK(pk[static_cast<std::size_t>(cc.ell * n + cc.delta)] % cc.ell == 0);
  }
}

TEST_CASE("modified rank and crank") {
  CHECK(modified_rank_poly(5, 0) == P("z^-2 + z^-1 + 1 + z + z^2"));
  CHECK(modified_rank_poly(7, 0) == rank_poly(5) + P("z^3 - z^4 + z^-3 - z^-4"));
  CHECK(modified_crank_poly(5, 0) == P("z^-2 + z^-1 + 1 + z + z^2"));
  CHECK(modified_crank_poly(5, 0) == crank_poly(4) + P("z^-1 - z^4 + z - z^-4"));
  CHECK_THROWS_AS(modified_rank_poly(11, 0), InvalidEll);
  CHECK_THROWS_AS(modified_crank_poly(13, 0), InvalidEll);
}
