#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gtmod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDivision : Error {
  ZeroDivision() : Error("division by zero") {}
};

struct NotInvertible : Error {
  using Error::Error;
};

// A requested coefficient lies beyond what the truncation order keeps exact.
struct PrecisionExhausted : Error {
  using Error::Error;
};

struct NotSmooth : Error {
  using Error::Error;
};

struct PoleAtOrigin : Error {
  using Error::Error;
};

struct ContextMismatch : Error {
  ContextMismatch() : Error("jet context mismatch") {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct RankTooLarge : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct SeedIssue {
  std::string kind;  // SingularTriple, HiddenSingularPair, UnequalPair, BadStructure
  std::string detail;
};

struct SeedValidationError : Error {
  explicit SeedValidationError(std::vector<SeedIssue> issues);
  std::vector<SeedIssue> issues;
};

}  // namespace gtmod
