#include "rankcrank/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "rankcrank/parallel.hpp"

namespace rankcrank {

unsigned default_threads() {
  if (const char* env = std::getenv("RANKCRANK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::partial:
      return "partial";
  }
  return "fail";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "partial") return Status::partial;
  throw std::invalid_argument("unknown report status: " + s);
}

void Report::settle() {
  if (counterexamples.empty()) {
    status = Status::pass;
  } else if (std::all_of(counterexamples.begin(), counterexamples.end(),
                         [](const Counterexample& c) { return c.conditional; })) {
    status = Status::partial;
  } else {
    status = Status::fail;
  }
}

void to_json(nlohmann::json& j, const Counterexample& c) {
  j = nlohmann::json{{"params", c.params}, {"reason", c.reason}};
  if (c.poly) {
    j["poly"] = *c.poly;
  } else {
    j["poly"] = nullptr;
  }
  if (c.conditional) j["conditional"] = true;
}

void from_json(const nlohmann::json& j, Counterexample& c) {
  c.params = j.at("params");
  c.reason = j.value("reason", std::string{});
  if (j.contains("poly") && !j.at("poly").is_null()) {
    c.poly = j.at("poly").get<LaurentPoly>();
  } else {
    c.poly.reset();
  }
  c.conditional = j.value("conditional", false);
}

void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"claim_id", r.claim_id},
                     {"range", r.range},
                     {"status", to_string(r.status)},
                     {"counterexamples", r.counterexamples},
                     {"notes", r.notes},
                     {"elapsed_s", r.elapsed_s}};
}

void from_json(const nlohmann::json& j, Report& r) {
  r.claim_id = j.at("claim_id").get<std::string>();
  r.range = j.at("range").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.counterexamples = j.at("counterexamples").get<std::vector<Counterexample>>();
  r.notes = j.value("notes", std::vector<std::string>{});
  r.elapsed_s = j.at("elapsed_s").get<double>();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_header() { return "claim_id,range,status,counterexamples,elapsed_s"; }

std::string csv_row(const Report& r) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_s);
  return csv_escape(r.claim_id) + "," + csv_escape(r.range) + "," + to_string(r.status) + "," +
         std::to_string(r.counterexamples.size()) + "," + elapsed;
}

}  // namespace rankcrank
