#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnsupportedOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a denominator vanishes modulo the certificate prime; callers
// move on to the next prime in the configured list.
struct BadPrime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClosureOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signals a broken mathematical model (wrong group, failed self-check).
struct IntegrityError : std::logic_error {
  using std::logic_error::logic_error;
};

struct InvalidEpimorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotLiftable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace cremona
