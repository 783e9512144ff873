#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclonorm {

enum class ErrorKind {
  kInexactDivision,
  kUndefined,
  kPreconditionViolated,
  kOutOfRange,
  kPerfectSquare,
  kAnalyticUnstable,
  kCosetConstancyViolated,
  kNotUnitMultiple,
  kSyntax,
  kEmptyInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The message starts with the
/// canonical phrase for the kind ("inexact division", "precondition
/// violated", ...), optionally followed by ": <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail = {});

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cyclonorm
