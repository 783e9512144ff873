#pragma once

#include <cstdint>
#include <vector>

#include "cyclonorm/bigint.hpp"

namespace cyclonorm {

/// (a + b sqrt(dstar)) / den, an integer of the quadratic field
/// Q(sqrt(dstar)). Normalized so that den is 1 or 2 and gcd(a, b, den) = 1;
/// den = 2 only when dstar = 1 (mod 4) and a = b (mod 2).
class QuadElem {
 public:
  QuadElem(BigInt a, BigInt b, int den, std::int64_t dstar);

  static QuadElem from_int(const BigInt& a, std::int64_t dstar);
  /// sqrt(dstar) itself; i sqrt(p) when dstar = -p.
  static QuadElem root(std::int64_t dstar);

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  int den() const noexcept { return den_; }
  std::int64_t dstar() const noexcept { return dstar_; }

  QuadElem conj() const;
  /// x * conj(x), an integer for every ring element.
  BigInt norm() const;
  bool is_rational() const noexcept { return b_ == 0; }

  QuadElem operator-() const;
  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend bool operator==(const QuadElem& x, const QuadElem& y) = default;

 private:
  QuadElem(BigInt a, BigInt b, BigInt den, std::int64_t dstar, bool);
  void normalize(BigInt den);

  BigInt a_;
  BigInt b_;
  int den_ = 1;
  std::int64_t dstar_ = 0;
};

/// x / y inside the ring of integers. Throws kInexactDivision when the
/// quotient is not integral, kPreconditionViolated for y = 0 or mismatched
/// fields.
QuadElem divide_exact(const QuadElem& x, const QuadElem& y);

/// epsilon = (x + y sqrt(p)) / 2 with x^2 - p y^2 = 4 norm_sign.
struct PellUnit {
  BigInt x;
  BigInt y;
  int norm_sign = 1;
  std::int64_t p = 0;

  QuadElem as_elem() const;
};

/// sqrt(d) = [a0; period...], the period ending in 2 a0.
struct CFExpansion {
  std::uint64_t a0 = 0;
  std::vector<std::uint64_t> period;
};

/// Legendre symbol via Euler's criterion. p must be an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// Throws kPerfectSquare when d is a square.
CFExpansion cf_sqrt(std::uint64_t d);

/// Fundamental unit of the ring of integers of Q(sqrt(p)) for a prime
/// p = 1 (mod 4): the least solution of x^2 - p y^2 = +-4 with x, y > 0.
PellUnit fundamental_unit(std::uint64_t p);

/// Number of reduced forms (A, B, C) of discriminant -p, for primes
/// p = 3 (mod 4), p > 3.
std::uint64_t class_number_imaginary(std::uint64_t p);

/// h = -sum chi(a) ln sin(pi a / p) / (2 ln epsilon), evaluated with MPFR
/// at 16 + p bits (at least 64) and rounded. Throws kAnalyticUnstable
/// when the value is not within 0.01 of an integer at both that precision
/// and twice it.
std::uint64_t class_number_real(std::uint64_t p);

/// Pre-rounding value of the analytic class number formula at the given
/// working precision.
double class_number_real_estimate(std::uint64_t p, long precision_bits);

/// prod_{j in QR(p)} (1 - zeta^(k j)) with zeta = e^(2 pi i / p), as an
/// element of Q(sqrt(p*)), p* = (-1)^((p-1)/2) p, where the QR Gauss
/// period eta satisfies eta - conj(eta) = sqrt(p*).
QuadElem gauss_period_relnorm(std::uint64_t p, std::int64_t k);

struct RealRelnormResult {
  std::int64_t m = 0;  // relnorm / sqrt(p) = sign * epsilon^m
  int sign = 1;
  std::uint64_t class_number = 0;
  bool ok = false;  // |m| == class_number
};

/// p prime, p = 1 (mod 4).
RealRelnormResult verify_real_relnorm(std::uint64_t p);

/// Sign s = (k/p) (-1)^((h+1)/2) predicted for the relative norm
/// s sqrt(-p) of 1 - zeta^k. p prime, p = 3 (mod 4), p > 3, gcd(k, p) = 1.
int imag_relnorm_sign(std::uint64_t p, std::int64_t k);
bool verify_imag_relnorm(std::uint64_t p, std::int64_t k);

}  // namespace cyclonorm
