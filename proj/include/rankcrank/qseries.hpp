#pragma once

#include <string>
#include <vector>

#include "rankcrank/laurent.hpp"
#include "rankcrank/residue_series.hpp"

namespace rankcrank {

// Default truncation order for series-backed queries.
inline constexpr int kDefaultOrder = 99;
// Largest order any builder accepts.
inline constexpr int kMaxSeriesOrder = 1200;

// Power series in q truncated after q^order, coefficients in Z[z, 1/z].
class QSeries {
 public:
  QSeries() : QSeries(0) {}
  explicit QSeries(int order);
  explicit QSeries(std::vector<LaurentPoly> coeffs);

  static QSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  LaurentPoly& at(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

  QSeries truncated(int order) const;
  // Coefficients specialised at z = 1.
  std::vector<Integer> at_one() const;

  // Results carry the smaller of the two orders.
  friend QSeries operator+(const QSeries& f, const QSeries& g);
  friend QSeries operator*(const QSeries& f, const QSeries& g);
  friend bool operator==(const QSeries& f, const QSeries& g) { return f.coeffs_ == g.coeffs_; }

 private:
  std::vector<LaurentPoly> coeffs_;
};

// Number of crank factors (k + [k odd]) / 2 in a k-colour crank.
int crank_arity(int k);

// Identifies C_k(a_1, ..., a_s) = C(0)^(k - s) * prod_j C(a_j z), s = crank_arity(k).
class CrankSpec {
 public:
  CrankSpec(int k, std::vector<int> a);

  int k() const { return k_; }
  const std::vector<int>& a() const { return a_; }
  int width() const { return a_.empty() ? 0 : a_.front(); }
  // a_1 <= k: the spec belongs to the exhaustive search space.
  bool in_search_space() const { return width() <= k_; }

  // "C_3(2,1)"
  std::string label() const;
  // "(2,1)"
  std::string a_string() const;

  friend bool operator==(const CrankSpec&, const CrankSpec&) = default;

 private:
  int k_;
  std::vector<int> a_;
};

// (a_1, ..., a_s) for the A_k family: (s+1, s, ..., 3, 2).
CrankSpec ak_spec(int k);
// (s+2, s+1, ..., 6, 5, 3, 2) for the B_k family; odd k >= 7 unless allow_even.
CrankSpec bk_spec(int k, bool allow_even = false);

// prod_{n>=1} (1 - q^n) / ((1 - z^a q^n)(1 - z^-a q^n)), no n = 1 correction.
QSeries crank_factor_series(int a, int order);
// crank_factor_series(1) with [q^1] replaced by 1; [q^n] = sum_m M(m,n) z^m.
QSeries crank_series_corrected(int order);
// sum_n q^(n^2) / prod_{k<=n} (1 - z q^k)(1 - z^-1 q^k); [q^n] = sum_m N(m,n) z^m.
QSeries rank_series(int order);

QSeries ck_series(const CrankSpec& spec, int order);
QSeries ak_series(int k, int order);
QSeries bk_series(int k, int order, bool allow_even = false);

// Residue form of ck_series for streaming row extraction.
ResidueSeries ck_residues(const CrankSpec& spec, int order);
ResidueSeries crank_factor_residues(int a, int order);
ResidueSeries rank_residues(int order);

// Materialises every row of a residue series.
QSeries to_qseries(const ResidueSeries& series);

}  // namespace rankcrank
