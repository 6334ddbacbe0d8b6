#pragma once

#include <stdexcept>
#include <string>

namespace qjlab {

/// Operation tables fail a ring axiom, or a constructor got malformed input.
class InvalidRing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on an argument does not hold (improper ideal, empty S, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two operands live in different rings.
class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("operands belong to different rings") {}
};

/// A construction would exceed the table-size cap.
class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree (definition vs. characterization) disagreed.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Construction expression, ideal generator list, or recipe did not parse.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unknown predicate, theorem, example or property id.
class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qjlab
