#pragma once

#include <stdexcept>
#include <string>

namespace xyzpoly {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  NotDivisible,
  PolynomialityViolation,
  ZeroPrefactor,
  DegenerateMap,
  DuplicateAbscissa,
  TruncationFailure,
  NullspaceDimension,
  SplitFailure,
  NonIntegerCoefficients,
  ParityViolation,
  KernelDimension,
  InterpolationUnstable,
  BadLength,
  NomeOutOfRange,
  NoSolution,
  Config,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by exact division. The remainder is kept in the JSON interchange
// form so reports can print the obstruction verbatim.
class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& what, std::string remainder_json)
      : Error(ErrorCode::NotDivisible, what),
        remainder_(std::move(remainder_json)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

// A recurrence step whose exact division failed: a counterexample to a
// polynomiality conjecture, reported rather than swallowed.
class PolynomialityViolation : public Error {
 public:
  PolynomialityViolation(const std::string& what, int index,
                         std::string remainder_json)
      : Error(ErrorCode::PolynomialityViolation, what),
        index_(index),
        remainder_(std::move(remainder_json)) {}
  int index() const noexcept { return index_; }
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  int index_;
  std::string remainder_;
};

}  // namespace xyzpoly
