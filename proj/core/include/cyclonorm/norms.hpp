#pragma once

#include <cstdint>
#include <string_view>

#include "cyclonorm/bigint.hpp"
#include "cyclonorm/polyring.hpp"

namespace cyclonorm {

enum class NormMethod { kPrs, kRecurrence, kDivisorProduct };

std::string_view to_string(NormMethod method);

/// A norm of r at the n-th roots of unity. is_unit <=> value is +1 or -1.
struct NormReport {
  std::uint64_t n = 0;
  IntPoly poly;
  BigInt value;
  bool is_unit = false;
  NormMethod method = NormMethod::kPrs;
};

/// Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a), by the subresultant
/// PRS. Constant arguments follow Res(c, g) = c^deg(g) and
/// Res(f, c) = c^deg(f). Throws Error(kUndefined) for a zero argument.
BigInt resultant_prs(const IntPoly& f, const IntPoly& g);

/// prod_{k=0}^{n-1} g(zeta_n^k) for g = a x^2 + b x + c, evaluated as
/// a^n + c^n - quad_trace(a, b, c, n). Requires a != 0 and n >= 1.
BigInt res_unit_circle_quadratic(std::uint64_t n, const BigInt& a, const BigInt& b,
                                 const BigInt& c);

/// prod over primitive n-th roots zeta of r(zeta), i.e. Res(Phi_n, r).
///
/// Quadratic r goes through the Moebius divisor product of
/// res_unit_circle_quadratic values (method kRecurrence when n is prime,
/// where only the divisors 1 and n contribute); any other degree, or a
/// vanishing divisor resultant, falls back to the PRS on Phi_n.
NormReport norm_primitive(const IntPoly& r, std::uint64_t n);

/// prod_{k=1}^{n-1} r(zeta_n^k), assembled as the product of the
/// primitive norms over the divisors d > 1 of n. The report's method is
/// kPrs if any factor needed the PRS fallback.
NormReport all_roots_report(const IntPoly& r, std::uint64_t n);
BigInt product_all_roots(const IntPoly& r, std::uint64_t n);

/// 1 - x + x^2 has all-roots product 1 and is a unit at zeta_n.
/// Requires n > 4 and gcd(n, 6) = 1; throws kPreconditionViolated otherwise.
bool theorem1_verify(std::uint64_t n);

/// The norms of 1 - x - x^2 and 1 + x - x^2 at zeta_p both equal L(p).
/// Requires p an odd prime.
bool theorem2_verify(std::uint64_t p);

/// Multiset { min(j, 2n - j) : j = 3k mod 2n, k = 1..n-1 } equals
/// {1, ..., n-1}. Requires n >= 5 and gcd(n, 6) = 1.
bool cosine_permutation_check(std::uint64_t n);

}  // namespace cyclonorm
