#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace desargues {

enum class ErrorKind {
  BackendMismatch,
  InvalidModulus,
  ZeroInverse,
  ZeroDirection,
  CoincidentPoints,
  ParallelLines,
  IdenticalLines,
  PointOffBaseLine,
  AuxOnBaseLine,
  DegenerateConstruction,
  InvalidConfiguration,
  ZeroDenominatorPoint,
  SingularCrossRatio,
  SingularArgument,
  ZeroValueNotInvertible,
  InvalidBase,
  UnsupportedBackend,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::ParallelLines: return "ParallelLines";
    case ErrorKind::IdenticalLines: return "IdenticalLines";
    case ErrorKind::PointOffBaseLine: return "PointOffBaseLine";
    case ErrorKind::AuxOnBaseLine: return "AuxOnBaseLine";
    case ErrorKind::DegenerateConstruction: return "DegenerateConstruction";
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::ZeroDenominatorPoint: return "ZeroDenominatorPoint";
    case ErrorKind::SingularCrossRatio: return "SingularCrossRatio";
    case ErrorKind::SingularArgument: return "SingularArgument";
    case ErrorKind::ZeroValueNotInvertible: return "ZeroValueNotInvertible";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::UnsupportedBackend: return "UnsupportedBackend";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. The kind is machine-readable; the
/// message names the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax errors carry the byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& detail)
      : Error(ErrorKind::ParseError,
              "syntax error at offset " + std::to_string(offset) + ": " + detail),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace desargues
