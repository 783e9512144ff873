#include "cyclonorm/cli/expr.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "cyclonorm/error.hpp"

namespace cyclonorm::cli {

namespace {

// Exponents beyond this are rejected as syntax errors; dense storage of a
// larger monomial is not useful for anything this tool computes.
constexpr std::size_t kMaxExponent = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  IntPoly parse() {
    skip_ws();
    if (pos_ == s_.size()) throw Error(ErrorKind::kEmptyInput);
    term(1);
    for (;;) {
      skip_ws();
      if (pos_ == s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail();
      ++pos_;
      term(op == '-' ? -1 : 1);
    }
    std::size_t top = terms_.empty() ? 0 : terms_.rbegin()->first;
    std::vector<BigInt> coeffs(terms_.empty() ? 0 : top + 1);
    for (auto& [deg, c] : terms_) coeffs[deg] += c;
    return IntPoly(std::move(coeffs));
  }

 private:
  [[noreturn]] void fail() const {
    throw Error(ErrorKind::kSyntax, "at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool at_digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void term(int sign) {
    skip_ws();
    if (at('+') || at('-')) {
      if (at('-')) sign = -sign;
      ++pos_;
      skip_ws();
    }
    std::optional<BigInt> coef;
    if (at_digit()) {
      coef = BigInt(digits(), 10);
      skip_ws();
      if (at('*')) {
        ++pos_;
        skip_ws();
        if (!at('x')) fail();
      }
    }
    if (at('x')) {
      ++pos_;
      std::size_t exponent = 1;
      skip_ws();
      if (at('^')) {
        ++pos_;
        skip_ws();
        if (!at_digit()) fail();
        const std::size_t start = pos_;
        const std::string e = digits();
        if (e.size() > 7 || std::stoul(e) == 0 || std::stoul(e) > kMaxExponent) {
          pos_ = start;
          fail();
        }
        exponent = std::stoul(e);
      }
      add(exponent, coef.value_or(BigInt(1)) * sign);
      return;
    }
    if (!coef) fail();
    add(0, *coef * sign);
  }

  void add(std::size_t degree, const BigInt& c) { terms_[degree] += c; }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::size_t, BigInt> terms_;
};

}  // namespace

IntPoly parse_poly(std::string_view source) { return Parser(source).parse(); }

PolyExpr parse_expr(std::string_view source) {
  return PolyExpr{std::string(source), parse_poly(source)};
}

std::string render_poly(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const BigInt mag = negative ? BigInt(-c[i]) : c[i];
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace cyclonorm::cli
