#pragma once

#include <stdexcept>
#include <string>

namespace latin {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied arguments that violate an operation's precondition
/// (order mismatch, non-permutation, t below the embedding bound, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Grid data of the wrong shape or with out-of-range entries.
class MalformedGrid : public Error {
 public:
  using Error::Error;
};

/// A transversal or witness names a cell whose symbol differs from the host.
class WitnessMismatch : public Error {
 public:
  using Error::Error;
};

/// Input that was required to be certified failed verification.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Text that does not follow one of the file formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A construction broke a guarantee it is proven to keep. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace latin
