#pragma once

#include <stdexcept>
#include <string>

namespace drcay {

/// Input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration/search budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold on valid input was found to fail. Raised only
/// by verification routines; seeing one means a bug or a counterexample.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input (group strings, element lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace drcay
