#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cyclonorm/bigint.hpp"

namespace cyclonorm {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Index i holds the coefficient of x^i; the stored top
/// coefficient is always nonzero, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  /// x^n - 1.
  static IntPoly x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// std::nullopt stands for deg(0) = -infinity.
  std::optional<std::size_t> degree() const noexcept;
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Leading coefficient; zero for the zero polynomial.
  BigInt leading() const;
  /// Coefficient of x^i, zero past the top.
  BigInt coeff(std::size_t i) const;
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// x^deg(p) * p(1/x).
  IntPoly reversed() const;
  IntPoly scaled(const BigInt& c) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return add(p, q); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return sub(p, q); }
inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return mul(p, q); }

/// Returns s with q * s == p. Throws Error(kInexactDivision) when the
/// remainder is nonzero or a quotient coefficient is not integral.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

/// Pseudo-remainder: remainder of lc(q)^(deg p - deg q + 1) * p by q.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q);

/// Nonnegative gcd of the coefficients (zero for the zero polynomial).
BigInt content(const IntPoly& p);
/// Divides every coefficient by c, which must divide each exactly.
IntPoly divide_exact(const IntPoly& p, const BigInt& c);

BigInt eval_int(const IntPoly& p, const BigInt& a);

// Elementary arithmetic functions, all by trial division.
int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// The n-th cyclotomic polynomial, monic of degree phi(n).
IntPoly cyclotomic(std::uint64_t n);

}  // namespace cyclonorm
