#pragma once

// Plain bigint series builders used as oracles for the residue engine.

#include <vector>

#include "rankcrank/laurent.hpp"
#include "rankcrank/qseries.hpp"

namespace rankcrank::testing {

// f *= 1 / (1 - z^a q^j)
void divide_binomial(std::vector<LaurentPoly>& f, int a, int j);
// f *= (1 - z^a q^j)
void multiply_binomial(std::vector<LaurentPoly>& f, int a, int j);

// (q)_inf^[k odd] / prod_j (z^a_j q)_inf (z^-a_j q)_inf through q^order.
std::vector<LaurentPoly> reference_ck(const CrankSpec& spec, int order);
// (q)_inf / (zq)_inf (z^-1 q)_inf
std::vector<LaurentPoly> reference_crank_raw(int order);
// sum_k q^(k^2) / (zq)_k (z^-1 q)_k
std::vector<LaurentPoly> reference_rank(int order);

// Sequence of coefficients over lo..hi.
std::vector<long> as_longs(const LaurentPoly& f);

}  // namespace rankcrank::testing
