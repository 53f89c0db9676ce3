#include "whitforge/errors.hpp"

namespace whitforge {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotRationalSemisimple: return "NotRationalSemisimple";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::WrongPartition: return "WrongPartition";
    case ErrorKind::NotDominated: return "NotDominated";
    case ErrorKind::InvalidPartitionForType: return "InvalidPartitionForType";
    case ErrorKind::UnsupportedQuery: return "UnsupportedQuery";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::InternalCheckFailure: return "InternalCheckFailure";
  }
  return "Unknown";
}

MathError::MathError(ErrorKind kind, std::string clause, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + clause +
                         (detail.empty() ? std::string() : " (" + detail + ")")),
      kind_(kind),
      clause_(std::move(clause)) {}

}  // namespace whitforge
