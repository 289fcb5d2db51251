#pragma once

#include <stdexcept>

namespace epi {

/// Text that is not a word over 'a'..'z'.
class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. stripping a suffix
/// that is not there).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A directive word that fails run or alphabet validation.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request that would grow cached words past the configured horizon.
class HorizonError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A closed-form identity failed on concrete words. Raised by strip steps
/// whose preconditions are consequences of the factorization theorems.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace epi
