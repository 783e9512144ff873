#include "cyclonorm/error.hpp"

namespace cyclonorm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInexactDivision: return "inexact division";
    case ErrorKind::kUndefined: return "undefined";
    case ErrorKind::kPreconditionViolated: return "precondition violated";
    case ErrorKind::kOutOfRange: return "out of range";
    case ErrorKind::kPerfectSquare: return "perfect square";
    case ErrorKind::kAnalyticUnstable: return "analytic formula unstable";
    case ErrorKind::kCosetConstancyViolated: return "coset constancy violated";
    case ErrorKind::kNotUnitMultiple: return "not a unit multiple";
    case ErrorKind::kSyntax: return "syntax error";
    case ErrorKind::kEmptyInput: return "empty input";
  }
  return "error";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail) {
  std::string msg(to_string(kind));
  if (!detail.empty()) {
    msg += kind == ErrorKind::kSyntax ? " " : ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(compose(kind, detail)), kind_(kind) {}

}  // namespace cyclonorm
