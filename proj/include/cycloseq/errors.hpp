#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycloseq {

enum class ErrorKind {
  InvalidTau,
  DegenerateFamily,
  UnsupportedPattern,
  PatternTooLong,
  CapExceeded,
  ConstantSequence,
  InvalidDisplacement,
  InvalidArgument,
};

constexpr std::string_view name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTau: return "InvalidTau";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::UnsupportedPattern: return "UnsupportedPattern";
    case ErrorKind::PatternTooLong: return "PatternTooLong";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ConstantSequence: return "ConstantSequence";
    case ErrorKind::InvalidDisplacement: return "InvalidDisplacement";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Raised when a query falls outside the domain of a closed form. The CLI maps
/// every DomainError to exit status 3.
class DomainError : public std::domain_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::domain_error(std::string(name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cycloseq
