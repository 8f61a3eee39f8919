#ifndef LATAGG_ERRORS_HPP
#define LATAGG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latagg {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- invalid input (CLI exit code 2) ---

class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, int line = 0)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class BadParam : public InputError {
 public:
  using InputError::InputError;
};

class CycleError : public InputError {
 public:
  using InputError::InputError;
};

class NotALattice : public InputError {
 public:
  using InputError::InputError;
};

class NotBounded : public InputError {
 public:
  using InputError::InputError;
};

class RedundantCover : public InputError {
 public:
  using InputError::InputError;
};

class NotComparable : public InputError {
 public:
  using InputError::InputError;
};

class DegenerateLattice : public InputError {
 public:
  using InputError::InputError;
};

class ArityMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NotJoinIrreducible : public InputError {
 public:
  using InputError::InputError;
};

class MissingWitness : public InputError {
 public:
  using InputError::InputError;
};

class NotSmallest : public InputError {
 public:
  using InputError::InputError;
};

class UnknownBuiltin : public InputError {
 public:
  using InputError::InputError;
};

class InvalidAggregation : public InputError {
 public:
  using InputError::InputError;
};

// --- configured resource bounds (CLI exit code 3) ---

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class ArityBoundExceeded : public BoundExceeded {
 public:
  using BoundExceeded::BoundExceeded;
};

// --- internal consistency failures (CLI exit code 4) ---
// These signal a bug in the library, never bad input.

class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ImplicationViolation : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

}  // namespace latagg

#endif  // LATAGG_ERRORS_HPP
