#pragma once

#include <stdexcept>
#include <string>

namespace rankcrank {

// Raised when an exact division leaves a nonzero remainder, or when the
// quotient would need non-integer coefficients.
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request exceeds a configured enumeration or series bound.
class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class EmptyPartition : public std::invalid_argument {
 public:
  EmptyPartition() : std::invalid_argument("statistic undefined for the empty partition") {}
};

class InvalidEll : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidK : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rankcrank
