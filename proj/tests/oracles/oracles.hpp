#pragma once

// Independent reference computations used only by the tests. Nothing here
// shares code paths with the library beyond IntPoly/BigInt containers.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cyclonorm/bigint.hpp"
#include "cyclonorm/polyring.hpp"

namespace oracle {

using cyclonorm::BigInt;
using cyclonorm::IntPoly;

/// Determinant of the Sylvester matrix by fraction-free (Bareiss)
/// elimination. Res(f, g) for deg f, deg g >= 1.
inline BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  const std::size_t m = *f.degree();
  const std::size_t n = *g.degree();
  const std::size_t size = m + n;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
  // Rows 0..n-1: shifted coefficients of f (highest first); rows n..: g.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) a[r][r + i] = f.coeff(m - i);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) a[n + r][r + i] = g.coeff(n - i);
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < size && a[swap][k] == 0) ++swap;
      if (swap == size) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

/// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, recursively, with plain
/// long division (no sparse shortcuts).
inline std::vector<IntPoly> cyclotomic_table_by_division(std::uint64_t max_n) {
  std::vector<IntPoly> phi(max_n + 1);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    std::vector<BigInt> rem(n + 1);
    rem[0] = -1;
    rem[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      const auto q = phi[d].coeffs();
      const std::size_t dq = q.size() - 1;
      const std::size_t dr = rem.size() - 1;
      std::vector<BigInt> quot(dr - dq + 1);
      for (std::size_t k = dr - dq + 1; k-- > 0;) {
        quot[k] = rem[k + dq];  // Phi_d is monic
        for (std::size_t i = 0; i <= dq; ++i) rem[k + i] -= quot[k] * q[i];
      }
      rem = std::move(quot);
    }
    phi[n] = IntPoly(rem);
  }
  return phi;
}

inline int mobius_brute(std::uint64_t n) {
  // Count prime factors with multiplicity via divisor enumeration.
  int sign = 1;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p <= m; ++p) {
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= p; ++q) prime = prime && (p % q != 0);
    if (!prime || m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::vector<std::uint64_t> divisors_brute(std::uint64_t n) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) v.push_back(d);
  }
  return v;
}

inline BigInt lucas_naive(std::uint64_t m) {
  BigInt a = 2, b = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

inline BigInt quad_trace_naive(long a, long b, long c, std::uint64_t n) {
  BigInt t0 = 2, t1 = -b;
  if (n == 0) return t0;
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt t2 = -b * t1 - BigInt(a) * c * t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

/// prod over k in [k_lo, n) with (primitive ? gcd(k,n)=1 : true) of
/// r(e^(2 pi i k / n)), evaluated in long double complex.
inline std::complex<long double> root_product(const IntPoly& r, std::uint64_t n, bool primitive,
                                              std::uint64_t k_lo = 1) {
  std::complex<long double> acc = 1;
  for (std::uint64_t k = k_lo; k < n; ++k) {
    if (primitive && std::gcd(k, n) != 1) continue;
    const long double theta = 2 * std::numbers::pi_v<long double> * k / n;
    const std::complex<long double> z = std::polar<long double>(1, theta);
    std::complex<long double> v = 0;
    auto c = r.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) v = v * z + static_cast<long double>(c[i].get_d());
    acc *= v;
  }
  return acc;
}

/// Placements of disjoint arcs {i, i+1 mod n} on an n-cycle, counted by
/// size, by scanning every subset of the n arcs.
inline std::vector<std::uint64_t> domino_bitmask(unsigned n) {
  std::vector<std::uint64_t> counts(n / 2 + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    // Arc i covers cells i and i+1 mod n; arcs i and i+1 share a cell.
    const std::uint64_t rotated = ((mask >> 1) | ((mask & 1) << (n - 1)));
    if (mask & rotated) continue;
    ++counts[static_cast<unsigned>(__builtin_popcountll(mask))];
  }
  return counts;
}

/// Least y with p y^2 +- 4 a perfect square, scanning y = 1..limit.
inline std::optional<std::pair<BigInt, BigInt>> pell4_brute(std::uint64_t p, std::uint64_t limit) {
  for (std::uint64_t y = 1; y <= limit; ++y) {
    for (int s : {-4, 4}) {
      BigInt v = BigInt(static_cast<unsigned long>(p)) * y * y + s;
      if (v > 0 && mpz_perfect_square_p(v.get_mpz_t())) {
        BigInt x;
        mpz_sqrt(x.get_mpz_t(), v.get_mpz_t());
        return std::pair{x, BigInt(static_cast<unsigned long>(y))};
      }
    }
  }
  return std::nullopt;
}

/// Fundamental unit of Z[(1+sqrt p)/2] from the continued fraction of
/// omega = (1 + sqrt p)/2: the first convergent A/B with
/// A^2 - A B - (p-1)/4 B^2 = +-1 gives (x, y) = (2A - B, B).
inline std::pair<BigInt, BigInt> unit_from_omega_cf(std::uint64_t p) {
  const BigInt bp = static_cast<unsigned long>(p);
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), bp.get_mpz_t());
  // Complete quotient (P + sqrt p) / Q, starting at P = 1, Q = 2.
  BigInt P = 1, Q = 2;
  BigInt a_prev = 0, a_cur = 1;  // A_{-2}, A_{-1}
  BigInt b_prev = 1, b_cur = 0;  // B_{-2}, B_{-1}
  const BigInt c = (bp - 1) / 4;
  for (int iter = 0; iter < 100000; ++iter) {
    BigInt q = (P + root) / Q;  // floor since root = floor(sqrt p) and Q > 0
    BigInt a_next = q * a_cur + a_prev;
    BigInt b_next = q * b_cur + b_prev;
    a_prev = std::move(a_cur);
    a_cur = std::move(a_next);
    b_prev = std::move(b_cur);
    b_cur = std::move(b_next);
    BigInt nv = a_cur * a_cur - a_cur * b_cur - c * b_cur * b_cur;
    if (nv == 1 || nv == -1) return {2 * a_cur - b_cur, b_cur};
    P = q * Q - P;
    Q = (bp - P * P) / Q;
  }
  return {0, 0};
}

/// h(-p) = -(1/p) sum_{a=1}^{p-1} a (a/p), p = 3 mod 4, p > 3.
inline std::int64_t class_number_imag_analytic(std::int64_t p) {
  std::int64_t s = 0;
  for (std::int64_t a = 1; a < p; ++a) {
    bool square = false;
    for (std::int64_t t = 1; t < p && !square; ++t) square = (t * t) % p == a;
    s += square ? a : -a;
  }
  return -s / p;
}

}  // namespace oracle
