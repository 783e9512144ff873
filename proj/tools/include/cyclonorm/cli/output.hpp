#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclonorm/bigint.hpp"
#include "cyclonorm/quadfield.hpp"

namespace cyclonorm::cli {

enum class Format { kText, kJson, kCsv };

using RowValue = std::variant<std::monostate, BigInt, std::vector<BigInt>, QuadElem>;

/// One result line. JSON and CSV always carry exactly the keys
/// command, n, poly, value, unit, method, ok (null / empty when absent);
/// `note` only appears in text output.
struct ResultRow {
  std::string command;
  std::optional<std::uint64_t> n;
  std::optional<std::string> poly;
  RowValue value;
  std::optional<bool> unit;
  std::optional<std::string> method;
  std::optional<bool> ok;
  std::string note;
};

/// "(5 - sqrt(5))/2", "-sqrt(-7)", "3".
std::string render_quad(const QuadElem& q);

/// Writes rows in the chosen format, flushing after each line.
class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void emit(const ResultRow& row);

 private:
  std::ostream& out_;
  Format format_;
  bool header_written_ = false;
};

}  // namespace cyclonorm::cli
