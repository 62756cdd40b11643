#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rankcrank {

using Integer = mpz_class;

// Laurent polynomial in one variable z with arbitrary-precision integer
// coefficients, stored densely over its span.
//
// Invariant: either the canonical zero (lo == 0, no coefficients) or the
// first and last stored coefficients are nonzero. coeffs()[i] is the
// coefficient of z^(lo + i).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<Integer> coeffs);

  static LaurentPoly constant(const Integer& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Integer& c, int exponent);
  // 1 + z + ... + z^(length-1)
  static LaurentPoly geometric(int length);

  bool is_zero() const { return coeffs_.empty(); }
  int lo() const { return lo_; }
  // Highest exponent; lo() - 1 for the zero polynomial.
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  // [z^m] f, zero outside the span.
  Integer coefficient(int m) const;
  const Integer* find(int m) const;

  // Value at z = 1.
  Integer sum() const;

  // z^k * f
  LaurentPoly shifted(int k) const;
  // f(z^t) for t >= 1
  LaurentPoly substitute_power(int t) const;
  // f(-z)
  LaurentPoly negate_variable() const;
  // f(1/z)
  LaurentPoly reflected() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);

  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
    return f.lo_ == g.lo_ && f.coeffs_ == g.coeffs_;
  }

 private:
  void normalize();
  void accumulate(const LaurentPoly& g, int sign);

  int lo_ = 0;
  std::vector<Integer> coeffs_;
};

inline LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
inline LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }
inline LaurentPoly substitute_power(const LaurentPoly& f, int t) { return f.substitute_power(t); }
inline Integer coefficient(const LaurentPoly& f, int m) { return f.coefficient(m); }

// f(1/z) == f(z)
bool is_symmetric(const LaurentPoly& f);

// The coefficient sequence over lo..hi, interior zeros included, is weakly
// increasing up to some index and weakly decreasing after it.
bool is_unimodal(const LaurentPoly& f);

bool is_nonnegative(const LaurentPoly& f);

// A zero coefficient strictly between two nonzero ones.
bool has_interior_zeros(const LaurentPoly& f);

// Text form, ascending exponents: "z^-2 - 3*z^-1 + 4 + z^5". Zero prints as "0".
std::string to_string(const LaurentPoly& f);

// Accepts the to_string form plus loose variants: "2*z^3", "2z^3", "z^(-1)",
// "z^{-1}", repeated exponents (summed) and arbitrary term order.
LaurentPoly parse_laurent(std::string_view text);

// {"lo": int, "coeffs": [decimal strings]}
void to_json(nlohmann::json& j, const LaurentPoly& f);
void from_json(const nlohmann::json& j, LaurentPoly& f);

}  // namespace rankcrank
