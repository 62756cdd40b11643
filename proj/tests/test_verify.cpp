#include <doctest.h>

#include "rankcrank/claims.hpp"
#include "rankcrank/errors.hpp"
#include "rankcrank/verify.hpp"

using namespace rankcrank;

TEST_CASE("report settle and status") {
  Report r;
  r.settle();
  CHECK(r.status == Status::pass);
  r.add(Counterexample{{{"n", 3}}, "conditional", std::nullopt, true});
  r.settle();
  CHECK(r.status == Status::partial);
  r.add(Counterexample{{{"n", 4}}, "hard", parse_laurent("1 - z"), false});
  r.settle();
  CHECK(r.status == Status::fail);
  CHECK_FALSE(r.passed());
  CHECK(parse_status("partial") == Status::partial);
  CHECK_THROWS_AS(parse_status("maybe"), std::invalid_argument);
}

TEST_CASE("report JSON roundtrip") {
  Report r;
  r.claim_id = "thm2.2";
  r.range = "n<=3";
  r.add(Counterexample{{{"n", 1}, {"m", -2}}, "why, with \"quotes\"", parse_laurent("z^-1 + 7"), true});
  r.add(Counterexample{{{"n", 2}}, "plain", std::nullopt, false});
  r.note("a note");
  r.elapsed_s = 0.25;
  r.settle();
  const nlohmann::json j = r;
  CHECK(j["status"] == "fail");
  CHECK(j["counterexamples"][1]["poly"].is_null());
  CHECK_FALSE(j["counterexamples"][1].contains("conditional"));
  const Report back = nlohmann::json::parse(j.dump()).get<Report>();
  CHECK(back == r);
}

TEST_CASE("csv") {
  CHECK(csv_header() == "claim_id,range,status,counterexamples,elapsed_s");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"x\"") == "\"say \"\"x\"\"\"");
  CHECK(csv_escape("plain") == "plain");
  Report r;
  r.claim_id = "lemma2.4";
  r.range = "k<=1, n<=4";
  CHECK(csv_row(r).rfind("lemma2.4,\"k<=1, n<=4\",pass,0,", 0) == 0);
}

TEST_CASE("proven suites pass on small ranges") {
  CHECK(verify_stanton_rank(5, 20).passed());
  CHECK(verify_stanton_rank(7, 15).passed());
  CHECK(verify_stanton_crank2(20).passed());
  for (int ell : {5, 7, 11}) CHECK(verify_stanton_crank3(ell, 12).passed());
  CHECK(verify_crank_mod10(20).passed());
  CHECK(verify_crank_tail(5, 30).passed());
  CHECK(verify_crank_n22().passed());
  CHECK(verify_colored_congruences(8, 20).passed());
  CHECK(verify_divisibility_criteria(PhiVariant::standard, 200, 1).passed());
  CHECK(verify_divisibility_criteria(PhiVariant::negated, 200, 1).passed());
  CHECK(verify_positive_quotients(30).passed());
  CHECK(verify_squared_quotients(30).passed());
}

TEST_CASE("rank inequality below and above the onset") {
  const auto above = verify_rank_unimodality(39, 60);
  CHECK(above.passed());
  bool saw_largest = false;
  for (const auto& n : above.notes) saw_largest |= n == "largest violating n below the onset: 38";
  CHECK(saw_largest);
  // Starting the checked range below the onset turns those into counterexamples.
  CHECK_FALSE(verify_rank_unimodality(30, 40).passed());
}

TEST_CASE("modified rank is not unimodal at every n") {
  const auto r = verify_stanton_rank(5, 10);
  bool noted = false;
  for (const auto& n : r.notes) noted |= n.find("not unimodal at n=") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("crank summation matches tail counts, not pointwise counts") {
  const auto r = verify_crank_summation(10, 60);
  CHECK(r.passed());
  bool mismatch = false;
  for (const auto& n : r.notes) mismatch |= n.find("disagrees at 545 of 610") != std::string::npos;
  CHECK(mismatch);
}

TEST_CASE("colored hypotheses") {
  CHECK_THROWS_AS(check_colored_hypotheses(Family::B, CongruenceCase::make(8, 6, 7)), HypothesisViolation);
  CHECK_THROWS_AS(check_colored_hypotheses(Family::B, CongruenceCase::make(6, 4, 5)), HypothesisViolation);
  CHECK_NOTHROW(check_colored_hypotheses(Family::B, CongruenceCase::make(11, 14, 5)));
  CHECK_NOTHROW(check_colored_hypotheses(Family::A, CongruenceCase::make(6, 4, 5)));
  CHECK_THROWS_AS(check_colored_hypotheses(Family::A, CongruenceCase::make(1, 14, 5)), HypothesisViolation);
  CHECK(parse_family("A") == Family::A);
  CHECK_THROWS_AS(parse_family("C"), std::invalid_argument);
}

TEST_CASE("colored divisibility on the A and B families") {
  CHECK(verify_colored_divisibility(ak_spec(6), 5, delta(6, 5), 120).passed());
  CHECK(verify_colored_divisibility(bk_spec(7), 5, 3, 120).passed());
  CHECK(verify_colored_stanton(Family::A, CongruenceCase::make(6, 4, 5), 20).passed());
}

TEST_CASE("asymptotic diagnostic tightens with n") {
  const auto small = asymptotic_diagnostic(100, {0, 1, 2});
  const auto large = asymptotic_diagnostic(400, {0, 1, 2});
  for (std::size_t i = 0; i < small.size(); ++i) {
    CHECK(large[i].rel_error < small[i].rel_error);
    CHECK(large[i].rel_error < 0.05);
    CHECK_FALSE(large[i].out_of_range);
  }
  const auto far = asymptotic_diagnostic(100, {40});
  CHECK(far[0].out_of_range);
  CHECK(asymptotic_window(100) == doctest::Approx(10.0 * std::log(100.0) / (std::numbers::pi * std::sqrt(6.0))));
}

TEST_CASE("claim catalog") {
  CHECK(is_known_claim("thm2.2"));
  CHECK_FALSE(is_known_claim("thm9.9"));
  CHECK_THROWS_AS(run_claim("thm9.9", {}), std::invalid_argument);
  ClaimOptions opts;
  opts.n_max = 10;
  const auto r = run_claim("thm2.2", opts);
  CHECK(r.claim_id == "thm2.2");
  CHECK(r.passed());
  for (const auto& info : claim_catalog()) CHECK(is_known_claim(info.id));
}
