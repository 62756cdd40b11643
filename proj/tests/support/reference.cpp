#include "support/reference.hpp"

namespace rankcrank::testing {

void divide_binomial(std::vector<LaurentPoly>& f, int a, int j) {
  const auto zq = LaurentPoly::monomial(1, a);
  for (std::size_t n = static_cast<std::size_t>(j); n < f.size(); ++n) f[n] += zq * f[n - j];
}

void multiply_binomial(std::vector<LaurentPoly>& f, int a, int j) {
  const auto zq = LaurentPoly::monomial(1, a);
  for (std::size_t n = f.size(); n-- > static_cast<std::size_t>(j);) f[n] -= zq * f[n - j];
}

namespace {

std::vector<LaurentPoly> one(int order) {
  std::vector<LaurentPoly> f(static_cast<std::size_t>(order) + 1);
  f[0] = LaurentPoly::constant(1);
  return f;
}

}  // namespace

std::vector<LaurentPoly> reference_ck(const CrankSpec& spec, int order) {
  auto f = one(order);
  for (int a : spec.a()) {
    for (int j = 1; j <= order; ++j) {
      divide_binomial(f, a, j);
      divide_binomial(f, -a, j);
    }
  }
  if (spec.k() % 2 != 0) {
    for (int j = 1; j <= order; ++j) multiply_binomial(f, 0, j);
  }
  return f;
}

std::vector<LaurentPoly> reference_crank_raw(int order) {
  auto f = one(order);
  for (int j = 1; j <= order; ++j) {
    divide_binomial(f, 1, j);
    divide_binomial(f, -1, j);
    multiply_binomial(f, 0, j);
  }
  return f;
}

std::vector<LaurentPoly> reference_rank(int order) {
  std::vector<LaurentPoly> total(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k * k <= order; ++k) {
    auto term = one(order - k * k);
    for (int j = 1; j <= k; ++j) {
      divide_binomial(term, 1, j);
      divide_binomial(term, -1, j);
    }
    for (std::size_t n = 0; n < term.size(); ++n) total[n + k * k] += term[n];
  }
  return total;
}

std::vector<long> as_longs(const LaurentPoly& f) {
  std::vector<long> out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_si());
  return out;
}

}  // namespace rankcrank::testing
