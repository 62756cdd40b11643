#include <doctest.h>

#include "rankcrank/errors.hpp"
#include "rankcrank/partitions.hpp"
#include "rankcrank/qseries.hpp"
#include "support/reference.hpp"

using namespace rankcrank;
using rankcrank::testing::reference_ck;

namespace {

LaurentPoly P(const char* text) { return parse_laurent(text); }

}  // namespace

TEST_CASE("crank factor examples") {
  const auto raw = crank_factor_series(1, 6);
  CHECK(raw[0] == P("1"));
  CHECK(raw[1] == P("z^-1 - 1 + z"));
  CHECK(crank_factor_series(0, 6)[4] == P("5"));
  CHECK(crank_factor_series(3, 6)[0] == P("1"));
}

TEST_CASE("corrected crank and rank examples") {
  const auto crank = crank_series_corrected(10);
  CHECK(crank[0] == P("1"));
  CHECK(crank[1] == P("1"));
  CHECK(crank[4] == P("z^-4 + z^-2 + 1 + z^2 + z^4"));
  const auto rank = rank_series(10);
  CHECK(rank[0] == P("1"));
  CHECK(rank[2] == P("z^-1 + z"));
  CHECK(rank[4] == P("z^-3 + z^-1 + 1 + z + z^3"));
}

TEST_CASE("family specs") {
  CHECK(ak_spec(3).a() == std::vector<int>{3, 2});
  CHECK(ak_spec(4).a() == std::vector<int>{3, 2});
  CHECK(bk_spec(7).a() == std::vector<int>{6, 5, 3, 2});
  CHECK(bk_spec(9).a() == std::vector<int>{7, 6, 5, 3, 2});
  CHECK_THROWS_AS(bk_spec(5), InvalidK);
  CHECK_THROWS_AS(bk_spec(8), InvalidK);
  CHECK(bk_spec(8, true).a() == std::vector<int>{6, 5, 3, 2});
  CHECK_THROWS_AS(ak_spec(2), InvalidK);
  CHECK(ak_spec(3).label() == "C_3(3,2)");
  CHECK(bk_spec(7).in_search_space());
  CHECK_FALSE(CrankSpec(3, {4, 1}).in_search_space());
  CHECK_THROWS_AS(CrankSpec(4, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CrankSpec(5, {2, 1}), std::invalid_argument);
  for (int k = 3; k <= 12; ++k) CHECK(ak_series(k, 5)[0] == P("1"));
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(rank_series(kMaxSeriesOrder + 1), BoundExceeded);
  CHECK_THROWS_AS(rank_series(-1), std::invalid_argument);
  CHECK(rank_series(0).order() == 0);
}

TEST_CASE("series agree with enumeration for n <= 30") {
  const auto rank = rank_series(30);
  const auto crank = crank_series_corrected(30);
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(rank[n] == rank_poly_enumerated(n));
    CHECK(crank[n] == crank_poly_enumerated(n));
  }
}

TEST_CASE("residue engine agrees with the bigint reference") {
  const int order = 30;
  std::vector<CrankSpec> specs = {CrankSpec(3, {2, 1}), CrankSpec(4, {4, 3}), CrankSpec(5, {5, 3, 2}),
                                  CrankSpec(6, {6, 5, 3}), ak_spec(9), bk_spec(7)};
  for (const auto& spec : specs) {
    CAPTURE(spec.label());
    const auto fast = ck_series(spec, order);
    const auto ref = reference_ck(spec, order);
    for (int n = 0; n <= order; ++n) CHECK(fast[n] == ref[static_cast<std::size_t>(n)]);
  }
  const auto raw = crank_factor_series(1, order);
  const auto raw_ref = rankcrank::testing::reference_crank_raw(order);
  const auto rank_ref = rankcrank::testing::reference_rank(order);
  const auto rank = rank_series(order);
  for (int n = 0; n <= order; ++n) {
    CHECK(raw[n] == raw_ref[static_cast<std::size_t>(n)]);
    CHECK(rank[n] == rank_ref[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("large coefficients need several channels and still reconstruct") {
  // A_12 at order 60 has coefficients far beyond one 31-bit prime.
  const auto spec = ak_spec(12);
  const auto residues = ck_residues(spec, 60);
  CHECK(residues.channels() >= 2);
  const auto ref = reference_ck(spec, 60);
  CHECK(residues.row(60) == ref[60]);
  CHECK(residues.row(37) == ref[37]);
}

TEST_CASE("specialisation at z = 1 counts colored partitions") {
  for (int k = 1; k <= 8; ++k) {
    const auto pk = colored_counts(k, 40);
    const int s = crank_arity(k);
    std::vector<int> a;
    for (int v = s; v >= 1; --v) a.push_back(v);
    const auto at_one = ck_series(CrankSpec(k, a), 40).at_one();
    for (int n = 0; n <= 40; ++n) CHECK(at_one[static_cast<std::size_t>(n)] == pk[static_cast<std::size_t>(n)]);
  }
  const auto p = partition_numbers(40);
  const auto c0 = crank_factor_series(0, 40);
  for (int n = 0; n <= 40; ++n) CHECK(c0[n] == LaurentPoly::constant(p[static_cast<std::size_t>(n)]));
}

TEST_CASE("symmetry and span bounds") {
  const int order = 80;
  const auto rank = rank_series(order);
  const auto crank = crank_series_corrected(order);
  for (int n = 1; n <= order; ++n) {
    CHECK(is_symmetric(rank[n]));
    CHECK(is_symmetric(crank[n]));
    CHECK(crank[n].lo() >= -n);
    CHECK(crank[n].hi() <= n);
    CHECK(rank[n].lo() >= -(n - 1));
    CHECK(rank[n].hi() <= n - 1);
  }
  for (int k = 3; k <= 9; ++k) {
    const auto a = ak_series(k, 40);
    for (int n = 0; n <= 40; ++n) CHECK(is_symmetric(a[n]));
  }
  const auto b = bk_series(7, 40);
  for (int n = 0; n <= 40; ++n) CHECK(is_symmetric(b[n]));
}

TEST_CASE("qseries arithmetic truncates to the smaller order") {
  const auto f = crank_factor_series(0, 10);
  const auto g = QSeries::one(5);
  CHECK((f * g).order() == 5);
  CHECK((f + g).order() == 5);
  CHECK(f * g == f.truncated(5));
}
