#pragma once

#include <stdexcept>
#include <string>

namespace depolar {

// Base class for every error raised by this library.  Callers that want a
// single catch site can catch Error&; the subclasses exist so that callers
// can tell recoverable domain conditions apart without string matching.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation needs a proper nonzero ideal but got <1> or, where noted, 0.
class ImproperIdealError : public Error {
public:
  using Error::Error;
};

// A monomial exponent exceeds the slot capacity declared for its variable.
class CapExceededError : public Error {
public:
  CapExceededError(const std::string& msg, int variable)
      : Error(msg), variable_(variable) {}
  int variable() const { return variable_; }

private:
  int variable_;
};

// A proposed path partition is not a partition of the poset into paths.
// block() is the index of the first offending block, or -1 when the problem
// is not attributable to a single block (e.g. missing elements).
class InvalidPartitionError : public Error {
public:
  InvalidPartitionError(const std::string& msg, int block = -1)
      : Error(msg), block_(block) {}
  int block() const { return block_; }

private:
  int block_;
};

// A configured size or work limit was hit before the computation finished.
class LimitExceededError : public Error {
public:
  using Error::Error;
};

// An isomorphism search ran out of budget: the answer is unknown, which is
// different from a definite "no bijection exists".
class InconclusiveError : public Error {
public:
  using Error::Error;
};

// A polynomial cannot be specialized against the given probability tables,
// e.g. a variable consumes a non-prefix set of state slots.
class EvaluationError : public Error {
public:
  using Error::Error;
};

// Malformed input file.  line() is 1-based, 0 when unknown.
class FormatError : public Error {
public:
  FormatError(const std::string& msg, int line = 0) : Error(msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

}  // namespace depolar
