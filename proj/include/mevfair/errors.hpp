#pragma once

#include <stdexcept>
#include <string>

namespace mevfair {

// Operand sizes disagree (permutations of different degree, payoff vs set).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rank, generator index or point out of range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Requested n exceeds the exhaustive-enumeration guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class EmptySetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A ratio or degree is undefined for the input (zero function, zero mean).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed model or constraint specification.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mevfair
