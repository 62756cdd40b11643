#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankcrank/laurent.hpp"

namespace rankcrank {

enum class Status { pass, fail, partial };

std::string to_string(Status s);
Status parse_status(const std::string& s);

struct Counterexample {
  nlohmann::json params = nlohmann::json::object();
  std::string reason;
  std::optional<LaurentPoly> poly;
  // Violates a statement that is itself conditional on an open conjecture.
  bool conditional = false;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// Outcome of one verification suite.
//
// status is derived from the counterexamples: pass when there are none,
// partial when every counterexample is conditional, fail otherwise.
struct Report {
  std::string claim_id;
  std::string range;
  Status status = Status::pass;
  std::vector<Counterexample> counterexamples;
  // Informative output that does not affect the status.
  std::vector<std::string> notes;
  double elapsed_s = 0.0;

  void add(Counterexample c) { counterexamples.push_back(std::move(c)); }
  void note(std::string text) { notes.push_back(std::move(text)); }
  // Recomputes status from the counterexamples.
  void settle();
  bool passed() const { return status == Status::pass; }

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Counterexample& c);
void from_json(const nlohmann::json& j, Counterexample& c);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

// One CSV row per report: claim_id,range,status,counterexamples,elapsed_s
std::string csv_header();
std::string csv_row(const Report& r);

// Quotes a CSV field when it contains a separator, quote or newline.
std::string csv_escape(const std::string& field);

}  // namespace rankcrank
