#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "rankcrank/cli.hpp"

using namespace rankcrank;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poly") {
  CHECK(run({"poly", "crank", "--n", "1"}).out == "1\n");
  CHECK(run({"poly", "rank", "--n", "4"}).out == "z^-3 + z^-1 + 1 + z + z^3\n");
  CHECK(run({"poly", "modified-rank", "--n", "0", "--ell", "5"}).out == "z^-2 + z^-1 + 1 + z + z^2\n");
  const auto j = nlohmann::json::parse(run({"--format", "json", "poly", "crank", "--n", "4"}).out);
  CHECK(j["lo"] == -4);
  CHECK(j["coeffs"].size() == 9);
}

TEST_CASE("quotient") {
  CHECK(run({"quotient", "--ell", "5", "--poly", "z^-2 + z^-1 + 1 + z + z^2"}).out == "z^-2\n");
  CHECK(run({"quotient", "--ell", "5", "--squared", "--poly", "z^-4 + z^-2 + 1 + z^2 + z^4"}).out == "z^-4\n");
  CHECK(run({"quotient", "--ell", "5", "--poly", R"({"lo": -2, "coeffs": ["1","1","1","1","1"]})"}).out == "z^-2\n");
  const auto bad = run({"quotient", "--ell", "5", "--poly", "1 + z"});
  CHECK(bad.code == kExitClaimFailed);
  CHECK(bad.out == "NotDivisible\n");
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "thm2.2", "--n-max", "5"}).code == kExitOk);
  CHECK(run({"verify", "no-such-claim"}).code == kExitUsage);
  CHECK(run({"poly", "crank"}).code == kExitUsage);
  CHECK(run({"poly", "modified-rank", "--n", "0", "--ell", "11"}).code == kExitUsage);
  CHECK(run({"--format", "yaml", "poly", "rank", "--n", "2"}).code == kExitUsage);
  CHECK(run({"verify", "conj1.3", "--n-lo", "30", "--n-hi", "40"}).code == kExitClaimFailed);
  CHECK(run({"verify", "list"}).code == kExitOk);
}

TEST_CASE("reports are byte-identical across thread counts") {
  const std::vector<std::string> base = {"--no-timing", "--format", "json", "verify", "thm1.2", "--k-max", "8", "--n-max", "20"};
  auto one = base, many = base;
  one.insert(one.begin(), {"--threads", "1"});
  many.insert(many.begin(), {"--threads", "4"});
  const auto a = run(one), b = run(many);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["claim_id"] == "thm1.2");
  CHECK(j["status"] == "pass");
  CHECK(j["elapsed_s"] == 0.0);
  CHECK(j["counterexamples"].is_array());
}

TEST_CASE("search output") {
  const auto r = run({"--threads", "2", "search", "--k-lo", "3", "--k-hi", "3", "--n-hi", "75"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "k,a,threshold,n_hi\n3,\"(2,1)\",7,75\n3,\"(3,1)\",-,75\n3,\"(3,2)\",6,75\n");
}

TEST_CASE("colored") {
  CHECK(run({"colored", "pk", "--k", "2", "--n", "2"}).out == "5\n");
  CHECK(run({"colored", "cases", "--k-max", "3"}).code == kExitOk);
}
