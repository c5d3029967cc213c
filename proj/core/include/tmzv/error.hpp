#pragma once

#include <stdexcept>
#include <string>

namespace tmzv {

// Division by zero and other scalar domain violations.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A word that does not lie in H^1 (nonempty and ending in x) was handed to an
// operation that decomposes words as z_k * tail.
class NotInH1 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A word surviving S_t that is not admissible (must start with x and end with y).
class NotInH0 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Multiple zeta series requested for a non-admissible index (first part 1).
class Divergent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the range where a decomposition formula is stated.
class BadParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tmzv
