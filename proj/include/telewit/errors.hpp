#pragma once

#include <stdexcept>

namespace telewit {

// Rejected input: a precondition or domain invariant does not hold.
// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A quantity computed internally came out wrong (probabilities not summing
// to one, a trace with a large imaginary part). The CLI maps this to exit
// code 3.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace telewit
