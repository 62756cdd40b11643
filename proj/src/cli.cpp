#include "rankcrank/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "rankcrank/claims.hpp"
#include "rankcrank/cyclotomic.hpp"
#include "rankcrank/errors.hpp"
#include "rankcrank/partitions.hpp"
#include "rankcrank/search.hpp"
#include "rankcrank/verify.hpp"

namespace rankcrank {
namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct Config {
  std::string format;
  unsigned threads = 0;
  bool no_timing = false;
  int q_order = -1;

  Format resolve(Format fallback) const {
    if (format.empty()) return fallback;
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::text;
  }
  unsigned worker_count() const { return threads == 0 ? default_threads() : threads; }
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checks the --q-order invariant and warms the series caches to that order.
void apply_q_order(const Config& cfg, int largest_n) {
  if (cfg.q_order < 0) return;
  if (cfg.q_order < largest_n) {
    throw UsageError("--q-order " + std::to_string(cfg.q_order) + " is below the requested n=" +
                     std::to_string(largest_n));
  }
  cached_rank_series(cfg.q_order);
  cached_crank_series(cfg.q_order);
}

void print_poly(const LaurentPoly& f, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::json:
      out << json(f).dump() << "\n";
      break;
    case Format::csv:
      out << "exponent,coefficient\n";
      for (std::size_t i = 0; i < f.size(); ++i) out << f.lo() + static_cast<int>(i) << "," << f.coeffs()[i] << "\n";
      break;
    case Format::text:
      out << to_string(f) << "\n";
      break;
  }
}

void print_report(const Report& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::json:
      out << json(r).dump(2) << "\n";
      return;
    case Format::csv:
      out << csv_header() << "\n" << csv_row(r) << "\n";
      return;
    case Format::text:
      break;
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_s);
  out << r.claim_id << ": " << to_string(r.status) << " [" << r.range << "] " << elapsed << "s\n";
  for (const auto& c : r.counterexamples) {
    out << "  " << (c.conditional ? "conditional " : "") << "counterexample " << c.params.dump() << ": " << c.reason;
    if (c.poly) out << "\n    " << to_string(*c.poly);
    out << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

int report_exit(const Report& r) { return r.status == Status::fail ? kExitClaimFailed : kExitOk; }

void print_search(const std::vector<SearchResult>& results, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    auto arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"k", r.spec.k()},
                     {"a", r.spec.a()},
                     {"threshold", r.threshold ? json(*r.threshold) : json(nullptr)},
                     {"n_hi", r.n_hi},
                     {"eventually_unimodal", r.eventually_unimodal},
                     {"largest_non_unimodal", r.largest_non_unimodal}});
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (fmt == Format::csv) {
    out << search_csv(results);
    return;
  }
  for (const auto& r : results) {
    out << r.spec.label() << "  "
        << (r.threshold ? "unimodal for all n > " + std::to_string(*r.threshold) : std::string("no")) << "\n";
  }
}

LaurentPoly read_poly(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return json::parse(text).get<LaurentPoly>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
    }
  }
  return parse_laurent(text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rank and crank statistics, divisibility checks and unimodality search", "rankcrank"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker threads (default: RANKCRANK_THREADS or hardware count)");
  app.add_flag("--no-timing", cfg.no_timing, "Report elapsed_s as 0 for reproducible output");
  app.add_option("--q-order", cfg.q_order, "Series truncation order; must cover the requested n");

  std::function<int()> action;

  // poly
  auto* poly = app.add_subcommand("poly", "Print rank_n, crank_n or their modified forms");
  std::string poly_kind;
  int poly_n = 0;
  int poly_ell = 0;
  poly->add_option("kind", poly_kind, "rank | crank | modified-rank | modified-crank")
      ->required()
      ->check(CLI::IsMember({"rank", "crank", "modified-rank", "modified-crank"}));
  poly->add_option("--n", poly_n, "Index n")->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--ell", poly_ell, "Modulus for the modified forms");
  poly->callback([&] {
    action = [&] {
      LaurentPoly f;
      if (poly_kind == "rank" || poly_kind == "crank") {
        apply_q_order(cfg, poly_n);
        f = poly_kind == "rank" ? rank_poly(poly_n) : crank_poly(poly_n);
      } else {
        if (poly_ell == 0) throw UsageError("--ell is required for " + poly_kind);
        apply_q_order(cfg, poly_ell * poly_n + beta(poly_ell));
        f = poly_kind == "modified-rank" ? modified_rank_poly(poly_ell, poly_n) : modified_crank_poly(poly_ell, poly_n);
      }
      print_poly(f, cfg.resolve(Format::text), out);
      return kExitOk;
    };
  });

  // quotient
  auto* quotient = app.add_subcommand("quotient", "Divide a polynomial by Phi_ell(z), Phi_ell(z^2) or Phi_ell(-z)");
  int q_ell = 0;
  bool q_squared = false;
  bool q_negated = false;
  std::string q_poly;
  quotient->add_option("--ell", q_ell, "Odd prime")->required();
  auto* sq = quotient->add_flag("--squared", q_squared, "Divide by Phi_ell(z^2)");
  quotient->add_flag("--negated", q_negated, "Divide by Phi_ell(-z)")->excludes(sq);
  quotient->add_option("--poly", q_poly, "Polynomial as text (z^-1 + 2 + z) or JSON")->required();
  quotient->callback([&] {
    action = [&] {
      const PhiVariant variant =
          q_squared ? PhiVariant::squared : (q_negated ? PhiVariant::negated : PhiVariant::standard);
      const LaurentPoly divisor = phi(Modulus(q_ell, variant));
      const LaurentPoly f = read_poly(q_poly);
      const Format fmt = cfg.resolve(Format::text);
      try {
        const LaurentPoly q = exact_quotient(f, divisor);
        if (fmt == Format::json) {
          out << json{{"divisible", true}, {"quotient", q}}.dump() << "\n";
        } else {
          print_poly(q, fmt, out);
        }
        return kExitOk;
      } catch (const NotDivisible& e) {
        if (fmt == Format::json) {
          out << json{{"divisible", false}, {"quotient", nullptr}}.dump() << "\n";
        } else {
          out << "NotDivisible\n";
        }
        err << e.what() << "\n";
        return kExitClaimFailed;
      }
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite by claim id ('verify list' for ids)");
  std::string claim;
  ClaimOptions claim_opts;
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->add_option("claim", claim, "Claim id or 'list'")->required();
  verify->add_option("--n-lo", claim_opts.n_lo);
  verify->add_option("--n-max", claim_opts.n_max);
  verify->add_option("--n-hi", claim_opts.n_hi);
  verify->add_option("--k-lo", claim_opts.k_lo);
  verify->add_option("--k-max", claim_opts.k_max);
  verify->add_option("--m-max", claim_opts.m_max);
  verify->add_option("--samples", claim_opts.samples);
  verify->add_option("--seed", claim_opts.seed);
  verify->add_option("--k", claim_opts.k);
  verify->add_option("--h", claim_opts.h);
  verify->add_option("--ell", claim_opts.ell);
  verify->add_option("--family", claim_opts.family)->check(CLI::IsMember({"A", "B"}));
  verify->callback([&] {
    action = [&] {
      if (claim == "list") {
        for (const auto& c : claim_catalog()) {
          out << c.id << (c.proven ? "  [proven]  " : "  [scan]    ") << c.summary;
          if (!c.defaults.empty()) out << "  (defaults: " << c.defaults << ")";
          out << "\n";
        }
        return kExitOk;
      }
      if (!is_known_claim(claim)) throw UsageError("unknown claim id '" + claim + "' (see 'verify list')");
      claim_opts.threads = cfg.worker_count();
      Report r = run_claim(claim, claim_opts);
      if (cfg.no_timing) r.elapsed_s = 0.0;
      print_report(r, cfg.resolve(Format::text), out);
      return report_exit(r);
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Threshold search over the crank space ('search table1' for k=3..6)");
  std::string search_mode;
  int k_lo = 3;
  int k_hi = 6;
  int n_hi = 75;
  search->add_option("mode", search_mode, "Optional preset: table1")->check(CLI::IsMember({"table1"}));
  search->add_option("--k-lo", k_lo)->check(CLI::Range(3, 20));
  search->add_option("--k-hi", k_hi)->check(CLI::Range(3, 20));
  search->add_option("--n-hi", n_hi)->check(CLI::Range(2, kMaxSeriesOrder + 1));
  search->callback([&] {
    action = [&] {
      if (search_mode == "table1") {
        k_lo = 3;
        k_hi = 6;
        n_hi = 75;
      }
      if (k_hi < k_lo) throw UsageError("--k-hi must be at least --k-lo");
      print_search(exhaustive_search(k_lo, k_hi, n_hi, cfg.worker_count()), cfg.resolve(Format::csv), out);
      return kExitOk;
    };
  });

  // colored
  auto* colored = app.add_subcommand("colored", "Colored partition counts and congruence cases");
  std::string colored_kind;
  int colored_k = 1;
  int colored_n = 0;
  int colored_k_max = 12;
  colored->add_option("kind", colored_kind, "pk | cases")->required()->check(CLI::IsMember({"pk", "cases"}));
  colored->add_option("--k", colored_k)->check(CLI::PositiveNumber);
  colored->add_option("--n", colored_n)->check(CLI::NonNegativeNumber);
  colored->add_option("--k-max", colored_k_max)->check(CLI::PositiveNumber);
  colored->callback([&] {
    action = [&] {
      const Format fmt = cfg.resolve(Format::text);
      if (colored_kind == "pk") {
        const Integer value = colored_count(colored_k, colored_n);
        if (fmt == Format::json) {
          out << json{{"k", colored_k}, {"n", colored_n}, {"p_k", value.get_str()}}.dump() << "\n";
        } else {
          out << value << "\n";
        }
        return kExitOk;
      }
      const auto cases = congruence_cases(colored_k_max);
      if (fmt == Format::json) {
        auto arr = json::array();
        for (const auto& c : cases) {
          arr.push_back({{"k", c.k}, {"h", c.h}, {"ell", c.ell}, {"t", c.t}, {"delta", c.delta}});
        }
        out << arr.dump(2) << "\n";
      } else {
        out << "k,h,ell,t,delta\n";
        for (const auto& c : cases) out << c.k << "," << c.h << "," << c.ell << "," << c.t << "," << c.delta << "\n";
      }
      return kExitOk;
    };
  });

  // diagnose
  auto* diagnose = app.add_subcommand("diagnose", "Asymptotic rank distribution diagnostic (inexact)");
  std::string diag_kind;
  int diag_n = 100;
  std::vector<int> diag_m{0};
  diagnose->add_option("kind", diag_kind)->required()->check(CLI::IsMember({"asymptotic"}));
  diagnose->add_option("--n", diag_n)->check(CLI::Range(2, kMaxSeriesOrder));
  diagnose->add_option("--m", diag_m, "Rank values")->delimiter(',');
  diagnose->callback([&] {
    action = [&] {
      apply_q_order(cfg, diag_n);
      const auto samples = asymptotic_diagnostic(diag_n, diag_m);
      const Format fmt = cfg.resolve(Format::text);
      if (fmt == Format::json) {
        auto arr = json::array();
        for (const auto& s : samples) {
          arr.push_back({{"n", s.n},
                         {"m", s.m},
                         {"gamma", s.gamma},
                         {"predicted", s.predicted},
                         {"actual", s.actual.get_str()},
                         {"rel_error", s.rel_error},
                         {"out_of_range", s.out_of_range}});
        }
        out << arr.dump(2) << "\n";
        return kExitOk;
      }
      out << "n,m,gamma,predicted,actual,rel_error,out_of_range\n";
      for (const auto& s : samples) {
        char line[160];
        std::snprintf(line, sizeof line, "%d,%d,%.6g,%.6e,", s.n, s.m, s.gamma, s.predicted);
        char tail[64];
        std::snprintf(tail, sizeof tail, ",%.6g,%s", s.rel_error, s.out_of_range ? "true" : "false");
        out << line << s.actual << tail << "\n";
      }
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }
  if (!action) {
    err << "error: no command\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Bad parameter values (ell, k, case, parse errors) are usage errors.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rankcrank
