#include "rankcrank/search.hpp"

#include <chrono>
#include <algorithm>
#include <sstream>

#include "rankcrank/errors.hpp"
#include "rankcrank/verify.hpp"

namespace rankcrank {
namespace {

// Strictly decreasing s-tuples from {1..k}, built from the last entry up.
void decreasing_tuples(int k, int s, std::vector<int>& tail, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(tail.size()) == s) {
    out.emplace_back(tail.rbegin(), tail.rend());
    return;
  }
  const int need = s - static_cast<int>(tail.size());
  for (int v = tail.empty() ? 1 : tail.back() + 1; v + need - 1 <= k; ++v) {
    tail.push_back(v);
    decreasing_tuples(k, s, tail, out);
    tail.pop_back();
  }
}

std::vector<int> non_unimodal_rows(const ResidueSeries& series, int n_lo, int n_hi) {
  std::vector<int> out;
  for (int n = n_lo; n < n_hi; ++n) {
    if (!is_unimodal(series.row(n))) out.push_back(n);
  }
  return out;
}

}  // namespace

std::vector<CrankSpec> crank_space(int k) {
  if (k < 3) throw InvalidK("the search space starts at k = 3");
  std::vector<std::vector<int>> tuples;
  std::vector<int> tail;
  decreasing_tuples(k, crank_arity(k), tail, tuples);
  std::sort(tuples.begin(), tuples.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  std::vector<CrankSpec> out;
  out.reserve(tuples.size());
  for (auto& a : tuples) out.emplace_back(k, std::move(a));
  return out;
}

SearchResult min_unimodal_threshold(const CrankSpec& spec, int n_hi) {
  if (n_hi < 2) throw std::invalid_argument("n_hi must be at least 2");
  if (n_hi - 1 > kMaxSeriesOrder) throw BoundExceeded("n_hi exceeds the series limit");
  const ResidueSeries series = ck_residues(spec, n_hi - 1);
  const auto bad = non_unimodal_rows(series, 1, n_hi);
  SearchResult r{spec, std::nullopt, n_hi, false, bad.empty() ? 0 : bad.back()};
  if (r.largest_non_unimodal < n_hi - 1) {
    r.threshold = r.largest_non_unimodal;
    r.eventually_unimodal = true;
  }
  return r;
}

std::vector<SearchResult> exhaustive_search(int k_lo, int k_hi, int n_hi, unsigned threads) {
  if (k_lo < 3 || k_hi < k_lo) throw std::invalid_argument("need 3 <= k_lo <= k_hi");
  std::vector<CrankSpec> specs;
  for (int k = k_lo; k <= k_hi; ++k) {
    for (auto& s : crank_space(k)) specs.push_back(std::move(s));
  }
  return parallel_map(specs.size(), threads, [&](std::size_t i) { return min_unimodal_threshold(specs[i], n_hi); });
}

Report check_conjecture_4_2(const std::vector<SearchResult>& results) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.claim_id = "conj4.2";
  int n_hi = 0;
  int k_lo = 0;
  int k_hi = 0;
  std::size_t adjacent = 0;
  for (const auto& res : results) {
    n_hi = std::max(n_hi, res.n_hi);
    k_lo = k_lo == 0 ? res.spec.k() : std::min(k_lo, res.spec.k());
    k_hi = std::max(k_hi, res.spec.k());
    const auto& a = res.spec.a();
    const bool gap_one = a.size() >= 2 && a[0] - a[1] == 1;
    if (gap_one) ++adjacent;
    if (gap_one != res.eventually_unimodal) {
      r.add(Counterexample{{{"spec", res.spec.label()}, {"n_hi", res.n_hi}, {"largest_non_unimodal", res.largest_non_unimodal}},
                           gap_one ? "a1-a2=1 but not unimodal at the top of the scan"
                                   : "a1-a2>=2 but unimodal from n=" + std::to_string(res.largest_non_unimodal + 1),
                           std::nullopt,
                           false});
    }
  }
  r.range = std::to_string(k_lo) + "<=k<=" + std::to_string(k_hi) + ", n<" + std::to_string(n_hi);
  r.note(std::to_string(results.size()) + " specs, " + std::to_string(adjacent) + " with a1-a2=1");
  r.note("eventual unimodality is judged within the scan bound only");
  r.settle();
  r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report check_conjecture_1_4(int k_lo, int k_hi, int n_hi, unsigned threads) {
  if (k_lo < 3 || k_hi < k_lo) throw std::invalid_argument("need 3 <= k_lo <= k_hi");
  if (n_hi - 1 > kMaxSeriesOrder) throw BoundExceeded("n_hi exceeds the series limit");
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.claim_id = "conj1.4";
  r.range = std::to_string(k_lo) + "<=k<=" + std::to_string(k_hi) + ", n<" + std::to_string(n_hi) + "; A from n=" +
            std::to_string(kFamilyAOnset) + ", B from n=" + std::to_string(kFamilyBOnset);
  struct Job {
    Family family;
    int k;
  };
  std::vector<Job> jobs;
  for (int k = k_lo; k <= k_hi; ++k) {
    jobs.push_back({Family::A, k});
    if (k >= 7 && k % 2 == 1) jobs.push_back({Family::B, k});
  }
  struct Outcome {
    std::vector<int> bad;
    std::vector<int> asymmetric;
  };
  auto outcomes = parallel_map(jobs.size(), threads, [&](std::size_t i) {
    const CrankSpec spec = family_spec(jobs[i].family, jobs[i].k);
    const ResidueSeries series = ck_residues(spec, n_hi - 1);
    Outcome o;
    for (int n = 1; n < n_hi; ++n) {
      const LaurentPoly f = series.row(n);
      if (!is_unimodal(f)) o.bad.push_back(n);
      if (!is_symmetric(f)) o.asymmetric.push_back(n);
    }
    return o;
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const CrankSpec spec = family_spec(jobs[i].family, jobs[i].k);
    const int onset = family_onset(jobs[i].family);
    const auto& o = outcomes[i];
    int largest_below = 0;
    for (int n : o.bad) {
      if (n < onset) {
        largest_below = n;
        continue;
      }
      r.add(Counterexample{{{"family", to_string(jobs[i].family)}, {"k", jobs[i].k}, {"n", n}},
                           spec.label() + " slice not unimodal",
                           std::nullopt,
                           false});
    }
    for (int n : o.asymmetric) {
      r.add(Counterexample{{{"family", to_string(jobs[i].family)}, {"k", jobs[i].k}, {"n", n}},
                           spec.label() + " slice not symmetric",
                           std::nullopt,
                           false});
    }
    r.note(to_string(jobs[i].family) + "_" + std::to_string(jobs[i].k) + " " + spec.a_string() +
           ": unimodal from n=" + std::to_string((o.bad.empty() ? 0 : o.bad.back()) + 1) +
           (largest_below ? ", last failure below onset at n=" + std::to_string(largest_below) : ""));
  }
  r.settle();
  r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string search_csv_header() { return "k,a,threshold,n_hi"; }

std::string search_csv_row(const SearchResult& r) {
  return std::to_string(r.spec.k()) + ",\"" + r.spec.a_string() + "\"," +
         (r.threshold ? std::to_string(*r.threshold) : std::string("-")) + "," + std::to_string(r.n_hi);
}

std::string search_csv(const std::vector<SearchResult>& results) {
  std::string out = search_csv_header() + "\n";
  for (const auto& r : results) out += search_csv_row(r) + "\n";
  return out;
}

}  // namespace rankcrank
