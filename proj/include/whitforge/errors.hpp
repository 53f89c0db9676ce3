#pragma once

#include <stdexcept>
#include <string>

namespace whitforge {

enum class ErrorKind {
  DimensionMismatch,
  SizeMismatch,
  NotRationalSemisimple,
  NotCommuting,
  NotNilpotent,
  WrongPartition,
  NotDominated,
  InvalidPartitionForType,
  UnsupportedQuery,
  PreconditionViolation,
  ZeroInput,
  NoSolution,
  ShapeViolation,
  LemmaViolation,
  InternalCheckFailure,
};

const char* to_string(ErrorKind kind);

// Mathematical rejection. `clause` names the violated precondition or the
// lemma clause whose runtime check failed.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, std::string clause, const std::string& detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& clause() const noexcept { return clause_; }

 private:
  ErrorKind kind_;
  std::string clause_;
};

// Malformed input (text that does not parse).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace whitforge
