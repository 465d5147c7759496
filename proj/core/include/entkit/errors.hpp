#pragma once

#include <stdexcept>
#include <string>

namespace entkit {

// Labels or levels outside their valid 1-based range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Inputs that fail a numerical validity check (norm, Hermiticity, unitarity).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency failure: a result that the construction guarantees
// cannot be empty or malformed came out that way anyway.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace entkit
