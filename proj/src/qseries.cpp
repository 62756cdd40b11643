#include "rankcrank/qseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "rankcrank/errors.hpp"

namespace rankcrank {

QSeries::QSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a series needs at least the q^0 coefficient");
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.coeffs_[0] = LaurentPoly::constant(1);
  return s;
}

QSeries QSeries::truncated(int order) const {
  if (order >= this->order()) return *this;
  return QSeries(std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

std::vector<Integer> QSeries::at_one() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.sum());
  return out;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
  const int order = std::min(f.order(), g.order());
  QSeries out(order);
  for (int n = 0; n <= order; ++n) out.at(n) = f[n] + g[n];
  return out;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
  const int order = std::min(f.order(), g.order());
  QSeries out(order);
  for (int n = 0; n <= order; ++n) {
    LaurentPoly acc;
    for (int i = 0; i <= n; ++i) {
      if (f[i].is_zero() || g[n - i].is_zero()) continue;
      acc += f[i] * g[n - i];
    }
    out.at(n) = std::move(acc);
  }
  return out;
}

int crank_arity(int k) { return (k + (k % 2 != 0 ? 1 : 0)) / 2; }

CrankSpec::CrankSpec(int k, std::vector<int> a) : k_(k), a_(std::move(a)) {
  if (k < 1) throw InvalidK("crank spec needs k >= 1");
  if (static_cast<int>(a_.size()) != crank_arity(k)) {
    throw std::invalid_argument("crank spec for k=" + std::to_string(k) + " needs " + std::to_string(crank_arity(k)) +
                                " entries, got " + std::to_string(a_.size()));
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] <= 0) throw std::invalid_argument("crank spec entries must be positive");
    if (i > 0 && a_[i] >= a_[i - 1]) throw std::invalid_argument("crank spec entries must strictly decrease");
  }
}

std::string CrankSpec::a_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < a_.size(); ++i) out << (i ? "," : "") << a_[i];
  out << ')';
  return out.str();
}

std::string CrankSpec::label() const { return "C_" + std::to_string(k_) + a_string(); }

CrankSpec ak_spec(int k) {
  if (k < 3) throw InvalidK("A_k is defined for k >= 3");
  const int s = crank_arity(k);
  std::vector<int> a;
  for (int v = s + 1; v >= 2; --v) a.push_back(v);
  return CrankSpec(k, std::move(a));
}

CrankSpec bk_spec(int k, bool allow_even) {
  if (k < 7) throw InvalidK("B_k is defined for k >= 7");
  if (k % 2 == 0 && !allow_even) throw InvalidK("B_k for even k needs an explicit opt-in");
  const int s = crank_arity(k);
  std::vector<int> a;
  for (int v = s + 2; v >= 5; --v) a.push_back(v);
  a.push_back(3);
  a.push_back(2);
  return CrankSpec(k, std::move(a));
}

namespace {

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (order > kMaxSeriesOrder) {
    throw BoundExceeded("series order " + std::to_string(order) + " exceeds the limit " +
                        std::to_string(kMaxSeriesOrder));
  }
}

}  // namespace

QSeries to_qseries(const ResidueSeries& series) {
  std::vector<LaurentPoly> rows;
  rows.reserve(static_cast<std::size_t>(series.order()) + 1);
  for (int n = 0; n <= series.order(); ++n) rows.push_back(series.row(n));
  return QSeries(std::move(rows));
}

ResidueSeries crank_factor_residues(int a, int order) {
  check_order(order);
  return build_residue_series(order, std::abs(a), [a](ResidueSeries& s) {
    s.set_one();
    for (int j = 1; j <= s.order(); ++j) {
      s.divide_by_binomial(a, j);
      s.divide_by_binomial(-a, j);
      s.multiply_by_binomial(0, j);
    }
  });
}

ResidueSeries ck_residues(const CrankSpec& spec, int order) {
  check_order(order);
  // C(0)^(k-s) prod_j C(a_j z) collapses to (q)_inf^(2s-k) / prod_j (z^a_j q)_inf (z^-a_j q)_inf
  // with 2s - k in {0, 1}.
  const bool odd = spec.k() % 2 != 0;
  return build_residue_series(order, spec.width(), [&spec, odd](ResidueSeries& s) {
    s.set_one();
    for (int a : spec.a()) {
      for (int j = 1; j <= s.order(); ++j) {
        s.divide_by_binomial(a, j);
        s.divide_by_binomial(-a, j);
      }
    }
    if (odd) {
      for (int j = 1; j <= s.order(); ++j) s.multiply_by_binomial(0, j);
    }
  });
}

ResidueSeries rank_residues(int order) {
  check_order(order);
  return build_residue_series(order, 1, [](ResidueSeries& r) {
    ResidueSeries term = r.like(r.order());
    term.set_one();
    r.add_shifted(term, 0);
    for (int k = 1; k * k <= r.order(); ++k) {
      term.truncate(r.order() - k * k);
      term.divide_by_binomial(1, k);
      term.divide_by_binomial(-1, k);
      r.add_shifted(term, k * k);
    }
  });
}

QSeries crank_factor_series(int a, int order) { return to_qseries(crank_factor_residues(a, order)); }

QSeries crank_series_corrected(int order) {
  QSeries s = crank_factor_series(1, order);
  if (order >= 1) s.at(1) = LaurentPoly::constant(1);
  return s;
}

QSeries rank_series(int order) { return to_qseries(rank_residues(order)); }

QSeries ck_series(const CrankSpec& spec, int order) { return to_qseries(ck_residues(spec, order)); }

QSeries ak_series(int k, int order) { return ck_series(ak_spec(k), order); }

QSeries bk_series(int k, int order, bool allow_even) { return ck_series(bk_spec(k, allow_even), order); }

}  // namespace rankcrank
