#include "rankcrank/claims.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rankcrank/errors.hpp"
#include "rankcrank/search.hpp"
#include "rankcrank/verify.hpp"

namespace rankcrank {
namespace {

using Runner = std::function<Report(const ClaimOptions&)>;

struct Entry {
  ClaimInfo info;
  Runner run;
};

Report colored_stanton(Family family, const ClaimOptions& o) {
  if (o.k || o.h || o.ell) {
    if (!o.k || !o.h || !o.ell) throw std::invalid_argument("a single case needs --k, --h and --ell");
    const auto c = CongruenceCase::make(*o.k, *o.h, *o.ell);
    const int top = o.n_hi.value_or(300);
    return verify_colored_stanton(family, c, o.n_max.value_or(std::max(0, (top - c.delta) / c.ell)), o.threads);
  }
  return verify_colored_stanton_sweep(family, o.k_max.value_or(12), o.n_hi.value_or(300), o.threads);
}

Report divisibility_instance(const ClaimOptions& o) {
  if (!o.k || !o.ell) throw std::invalid_argument("cor3.5 needs --k and --ell");
  const Family family = parse_family(o.family.value_or("A"));
  const CrankSpec spec = family_spec(family, *o.k);
  return verify_colored_divisibility(spec, *o.ell, delta(*o.k, *o.ell), o.n_hi.value_or(300), o.threads);
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"conj1.1-part1-ell5", "modified rank quotients by Phi_5 are non-negative", "--n-max 99", false},
       [](const ClaimOptions& o) { return verify_stanton_rank(5, o.n_max.value_or(99), o.threads); }},
      {{"conj1.1-part1-ell7", "modified rank quotients by Phi_7 are non-negative", "--n-max 70", false},
       [](const ClaimOptions& o) { return verify_stanton_rank(7, o.n_max.value_or(70), o.threads); }},
      {{"conj1.1-part2", "crank_{5n+4} / Phi_5(z^2) is non-negative", "--n-max 99", true},
       [](const ClaimOptions& o) { return verify_stanton_crank2(o.n_max.value_or(99), o.threads); }},
      {{"conj1.1-part3-ell5", "modified crank quotients by Phi_5 are non-negative", "--n-max 99", true},
       [](const ClaimOptions& o) { return verify_stanton_crank3(5, o.n_max.value_or(99), o.threads); }},
      {{"conj1.1-part3-ell7", "modified crank quotients by Phi_7 are non-negative", "--n-max 70", true},
       [](const ClaimOptions& o) { return verify_stanton_crank3(7, o.n_max.value_or(70), o.threads); }},
      {{"conj1.1-part3-ell11", "modified crank quotients by Phi_11 are non-negative", "--n-max 44", true},
       [](const ClaimOptions& o) { return verify_stanton_crank3(11, o.n_max.value_or(44), o.threads); }},
      {{"conj1.3", "N(m,n) >= N(m+1,n) for 0 <= m <= n-3", "--n-lo 39 --n-hi 200", false},
       [](const ClaimOptions& o) {
         return verify_rank_unimodality(o.n_lo.value_or(kRankInequalityOnset), o.n_hi.value_or(200), o.threads);
       }},
      {{"conj1.4", "A_k and B_k slices are unimodal past the onset", "--k-lo 3 --k-max 12 --n-hi 100", false},
       [](const ClaimOptions& o) {
         return check_conjecture_1_4(o.k_lo.value_or(3), o.k_max.value_or(12), o.n_hi.value_or(100), o.threads);
       }},
      {{"conj4.2", "eventually unimodal iff a1 - a2 = 1", "--k-lo 3 --k-max 6 --n-hi 75", false},
       [](const ClaimOptions& o) {
         return check_conjecture_4_2(
             exhaustive_search(o.k_lo.value_or(3), o.k_max.value_or(6), o.n_hi.value_or(75), o.threads));
       }},
      {{"thm1.2", "ell | p_k(ell n + delta) for every congruence case", "--k-max 12 --n-max 50", true},
       [](const ClaimOptions& o) {
         return verify_colored_congruences(o.k_max.value_or(12), o.n_max.value_or(50), o.threads);
       }},
      {{"thm1.5-A", "A_k slices on congruent progressions: divisibility and positivity", "--k-max 12 --n-hi 300",
        true},
       [](const ClaimOptions& o) { return colored_stanton(Family::A, o); }},
      {{"thm1.5-B", "B_k slices on congruent progressions: divisibility and positivity", "--k-max 12 --n-hi 300",
        true},
       [](const ClaimOptions& o) { return colored_stanton(Family::B, o); }},
      {{"cor3.5", "Phi_ell divides the family slice at ell n + delta(k, ell)", "--family A --k K --ell L --n-hi 300",
        true},
       divisibility_instance},
      {{"thm2.2", "5 M(2k+j,10;5n+4) = M(j,2;5n+4)", "--n-max 99", true},
       [](const ClaimOptions& o) { return verify_crank_mod10(o.n_max.value_or(99), o.threads); }},
      {{"lemma2.1", "hat-sum criterion matches division by Phi_ell(z)", "--samples 1000 --seed 20241016", true},
       [](const ClaimOptions& o) {
         return verify_divisibility_criteria(PhiVariant::standard, o.samples.value_or(1000), o.seed);
       }},
      {{"lemma2.2", "signed hat-sum criterion matches division by Phi_ell(-z)", "--samples 1000 --seed 20241016",
        true},
       [](const ClaimOptions& o) {
         return verify_divisibility_criteria(PhiVariant::negated, o.samples.value_or(1000), o.seed);
       }},
      {{"lemma2.4", "M(n-k,n) constant for n >= 2k; M(n-1,n)=0, M(n,n)=1", "--k-max 10 --n-max 60", true},
       [](const ClaimOptions& o) { return verify_crank_tail(o.k_max.value_or(10), o.n_max.value_or(60)); }},
      {{"lemma3.1", "symmetric unimodal multiples of Phi_ell have non-negative quotients", "--n-max 60", true},
       [](const ClaimOptions& o) { return verify_positive_quotients(o.n_max.value_or(60)); }},
      {{"lemma3.2", "z^(ell-1) f / Phi_ell(z^2) is symmetric and non-negative", "--n-max 60", true},
       [](const ClaimOptions& o) { return verify_squared_quotients(o.n_max.value_or(60)); }},
      {{"crank-summation", "tail crank counts against the summation formula", "--m-max 10 --n-max 60", true},
       [](const ClaimOptions& o) { return verify_crank_summation(o.m_max.value_or(10), o.n_max.value_or(60)); }},
      {{"crank-n22", "M(N-ell-1,N) - M(N-ell,N) - 1 >= 0 at N = 22 ell + beta", "", true},
       [](const ClaimOptions&) { return verify_crank_n22(); }},
  };
  return table;
}

}  // namespace

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> catalog = [] {
    std::vector<ClaimInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

bool is_known_claim(const std::string& id) {
  const auto& t = entries();
  return std::any_of(t.begin(), t.end(), [&](const Entry& e) { return e.info.id == id; });
}

Report run_claim(const std::string& id, const ClaimOptions& options) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e.run(options);
  }
  throw std::invalid_argument("unknown claim id: " + id);
}

}  // namespace rankcrank
