#pragma once

#include <stdexcept>
#include <string>

namespace kregular {

// Precondition violated by an argument (symbol out of range, bad position...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input for words, patterns or pattern sets.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A query would exceed the configured enumeration limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact computation produced something that should be impossible, e.g. a
// non-integral value from a formula that must be integral.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kregular
