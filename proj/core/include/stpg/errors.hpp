#ifndef STPG_ERRORS_HPP
#define STPG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stpg {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes do not conform (column mismatch, wrong vector length, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A delta index, player number or profile coordinate is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires finite payoffs met a -inf entry.
class InfinitePayoffError : public Error {
 public:
  using Error::Error;
};

/// A belief was requested for a type with zero marginal probability.
class ZeroProbabilityTypeError : public Error {
 public:
  using Error::Error;
};

/// Every update candidate of some state has payoff -inf.
class InfeasibleUpdateError : public Error {
 public:
  using Error::Error;
};

class NonpositiveWeightError : public Error {
 public:
  using Error::Error;
};

/// Malformed game document text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document with inconsistent contents; the message names the
/// offending field and coordinate.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace stpg

#endif  // STPG_ERRORS_HPP
