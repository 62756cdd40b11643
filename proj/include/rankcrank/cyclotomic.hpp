#pragma once

#include "rankcrank/laurent.hpp"

namespace rankcrank {

// Which substitution of the cyclotomic polynomial Phi_ell is meant.
enum class PhiVariant { standard, squared, negated };

// Odd prime ell with a substitution variant. Construction validates primality.
class Modulus {
 public:
  Modulus(int ell, PhiVariant variant = PhiVariant::standard);

  int ell() const { return ell_; }
  PhiVariant variant() const { return variant_; }

 private:
  int ell_;
  PhiVariant variant_;
};

bool is_prime(long n);

// Phi_ell(z), Phi_ell(z^2) or Phi_ell(-z) for the modulus' variant.
LaurentPoly phi(const Modulus& m);
inline LaurentPoly phi(int ell, PhiVariant variant = PhiVariant::standard) {
  return phi(Modulus(ell, variant));
}

// Sum of the coefficients of f over exponents congruent to r mod modulus.
Integer hat_sum(const LaurentPoly& f, long r, long modulus);

// Phi_ell(z) | f, decided by the equal-residue-class-sum criterion.
bool divides_standard(const LaurentPoly& f, int ell);
// Phi_ell(-z) | f, decided by the signed mod-2*ell class-sum criterion.
bool divides_negated(const LaurentPoly& f, int ell);

struct DivisionResult {
  LaurentPoly quotient;
  LaurentPoly remainder;
  // False when an intermediate step needed a non-integer quotient coefficient.
  bool integral = true;
};

// Long division of f by g in Z[z, 1/z]. g's lowest coefficient is treated as a
// unit shift, so the remainder is zero exactly when g | f in the Laurent ring
// (provided the division stays integral).
DivisionResult divide(const LaurentPoly& f, const LaurentPoly& g);

bool divides_by_division(const LaurentPoly& f, const LaurentPoly& g);

// q with q * g == f; throws NotDivisible otherwise.
LaurentPoly exact_quotient(const LaurentPoly& f, const LaurentPoly& g);

// If f is symmetric, unimodal and divisible by Phi_ell(z), the quotient must be
// non-negative. Returns true when the hypotheses fail.
bool check_lemma_3_1(const LaurentPoly& f, int ell);

// [z^(m-1)] f >= [z^(m+1)] f for every m >= 1.
bool has_alternate_decrease(const LaurentPoly& f);

// If f is symmetric, satisfies has_alternate_decrease and Phi_ell(z^2) | f,
// then z^(ell-1) f / Phi_ell(z^2) must be symmetric and non-negative. Returns
// true when the hypotheses fail.
bool check_lemma_3_2(const LaurentPoly& f, int ell);

}  // namespace rankcrank
