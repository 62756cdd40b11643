#include "rankcrank/cyclotomic.hpp"

#include <string>

#include "rankcrank/errors.hpp"

namespace rankcrank {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Modulus::Modulus(int ell, PhiVariant variant) : ell_(ell), variant_(variant) {
  if (ell % 2 == 0 || !is_prime(ell)) {
    throw InvalidEll("modulus must be an odd prime, got " + std::to_string(ell));
  }
}

LaurentPoly phi(const Modulus& m) {
  const LaurentPoly base = LaurentPoly::geometric(m.ell());
  switch (m.variant()) {
    case PhiVariant::standard:
      return base;
    case PhiVariant::squared:
      return base.substitute_power(2);
    case PhiVariant::negated:
      return base.negate_variable();
  }
  return base;
}

namespace {

long residue(long e, long modulus) { return ((e % modulus) + modulus) % modulus; }

std::vector<Integer> class_sums(const LaurentPoly& f, long modulus) {
  std::vector<Integer> sums(static_cast<std::size_t>(modulus));
  for (std::size_t i = 0; i < f.size(); ++i) {
    sums[static_cast<std::size_t>(residue(f.lo() + static_cast<long>(i), modulus))] += f.coeffs()[i];
  }
  return sums;
}

}  // namespace

Integer hat_sum(const LaurentPoly& f, long r, long modulus) {
  if (modulus < 1) throw std::invalid_argument("hat_sum modulus must be positive");
  const long target = residue(r, modulus);
  Integer s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (residue(f.lo() + static_cast<long>(i), modulus) == target) s += f.coeffs()[i];
  }
  return s;
}

bool divides_standard(const LaurentPoly& f, int ell) {
  const Modulus m(ell);
  const auto sums = class_sums(f, m.ell());
  for (int r = 0; r + 1 < ell; ++r) {
    if (sums[static_cast<std::size_t>(r)] != sums[static_cast<std::size_t>(ell - 1)]) return false;
  }
  return true;
}

bool divides_negated(const LaurentPoly& f, int ell) {
  const Modulus m(ell);
  const auto sums = class_sums(f, 2L * m.ell());
  const auto at = [&](int r) -> const Integer& { return sums[static_cast<std::size_t>(r)]; };
  const Integer target = at(ell - 1) - at(2 * ell - 1);
  for (int r = 0; r + 1 < ell; ++r) {
    Integer lhs = at(r) - at(r + ell);
    if (r % 2 != 0) lhs = -lhs;
    if (lhs != target) return false;
  }
  return true;
}

DivisionResult divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  DivisionResult out;
  if (f.is_zero()) return out;

  // Ordinary polynomials F = z^-lo(f) f and G = z^-lo(g) g; G(0) != 0.
  std::vector<Integer> rem = f.coeffs();
  const auto& div = g.coeffs();
  const Integer& lead = div.back();
  const std::size_t dg = div.size() - 1;
  if (rem.size() <= dg) {
    out.remainder = f;
    return out;
  }
  std::vector<Integer> quot(rem.size() - dg);
  Integer step;
  for (std::size_t top = rem.size() - 1; top + 1 > dg; --top) {
    Integer& c = rem[top];
    if (sgn(c) == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) {
      out.integral = false;
      break;
    }
    mpz_divexact(step.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    const std::size_t shift = top - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      mpz_submul(rem[shift + i].get_mpz_t(), step.get_mpz_t(), div[i].get_mpz_t());
    }
    quot[shift] = step;
    if (top == 0) break;
  }
  out.quotient = LaurentPoly(f.lo() - g.lo(), std::move(quot));
  out.remainder = LaurentPoly(f.lo(), std::move(rem));
  return out;
}

bool divides_by_division(const LaurentPoly& f, const LaurentPoly& g) {
  const auto r = divide(f, g);
  return r.integral && r.remainder.is_zero();
}

LaurentPoly exact_quotient(const LaurentPoly& f, const LaurentPoly& g) {
  auto r = divide(f, g);
  if (!r.integral) throw NotDivisible("quotient of " + to_string(f) + " by " + to_string(g) + " is not integral");
  if (!r.remainder.is_zero()) {
    throw NotDivisible(to_string(g) + " does not divide " + to_string(f) + " (remainder " + to_string(r.remainder) +
                       ")");
  }
  return std::move(r.quotient);
}

bool check_lemma_3_1(const LaurentPoly& f, int ell) {
  if (!is_symmetric(f) || !is_unimodal(f) || !divides_standard(f, ell)) return true;
  return is_nonnegative(exact_quotient(f, phi(ell)));
}

bool has_alternate_decrease(const LaurentPoly& f) {
  for (int m = 1; m - 1 <= f.hi(); ++m) {
    if (f.coefficient(m - 1) < f.coefficient(m + 1)) return false;
  }
  return true;
}

bool check_lemma_3_2(const LaurentPoly& f, int ell) {
  const LaurentPoly divisor = phi(ell, PhiVariant::squared);
  if (!is_symmetric(f) || !has_alternate_decrease(f) || !divides_by_division(f, divisor)) return true;
  const LaurentPoly normalized = exact_quotient(f, divisor).shifted(ell - 1);
  return is_symmetric(normalized) && is_nonnegative(normalized);
}

}  // namespace rankcrank
