#include "cyclonorm/norms.hpp"

#include <numeric>
#include <optional>
#include <vector>

#include "cyclonorm/error.hpp"
#include "cyclonorm/sequences.hpp"

namespace cyclonorm {

std::string_view to_string(NormMethod method) {
  switch (method) {
    case NormMethod::kPrs: return "prs";
    case NormMethod::kRecurrence: return "recurrence";
    case NormMethod::kDivisorProduct: return "divisor_product";
  }
  return "prs";
}

BigInt res_unit_circle_quadratic(std::uint64_t n, const BigInt& a, const BigInt& b,
                                 const BigInt& c) {
  if (a == 0) throw Error(ErrorKind::kPreconditionViolated, "leading coefficient must be nonzero");
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "n must be positive");
  return pow(a, n) + pow(c, n) - quad_trace(a, b, c, n);
}

namespace {

NormReport make_report(const IntPoly& r, std::uint64_t n, BigInt value, NormMethod method) {
  NormReport rep;
  rep.n = n;
  rep.poly = r;
  rep.is_unit = value == 1 || value == -1;
  rep.value = std::move(value);
  rep.method = method;
  return rep;
}

// prod_{d|n} Res(x^d - 1, r)^mu(n/d); nullopt when some factor vanishes.
std::optional<BigInt> divisor_product_norm(const IntPoly& r, std::uint64_t n) {
  const BigInt& c = r.coeffs()[0];
  const BigInt& b = r.coeffs()[1];
  const BigInt& a = r.coeffs()[2];
  BigInt num = 1;
  BigInt den = 1;
  for (auto d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    BigInt full = res_unit_circle_quadratic(d, a, b, c);
    if (full == 0) return std::nullopt;
    (mu > 0 ? num : den) *= full;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error(ErrorKind::kInexactDivision, "divisor product is not integral");
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

void require_coprime_to_six(std::uint64_t n, const char* what) {
  if (n <= 4 || std::gcd<std::uint64_t>(n, 6) != 1) {
    throw Error(ErrorKind::kPreconditionViolated,
                std::string(what) + " requires n > 4 with gcd(n, 6) = 1, got " + std::to_string(n));
  }
}

}  // namespace

NormReport norm_primitive(const IntPoly& r, std::uint64_t n) {
  if (r.is_zero()) throw Error(ErrorKind::kPreconditionViolated, "norm of the zero polynomial");
  if (n < 2) throw Error(ErrorKind::kPreconditionViolated, "norm_primitive requires n >= 2");
  if (r.degree() == 2) {
    if (auto value = divisor_product_norm(r, n)) {
      const auto method = is_prime(n) ? NormMethod::kRecurrence : NormMethod::kDivisorProduct;
      return make_report(r, n, std::move(*value), method);
    }
  }
  return make_report(r, n, resultant_prs(cyclotomic(n), r), NormMethod::kPrs);
}

NormReport all_roots_report(const IntPoly& r, std::uint64_t n) {
  if (r.is_zero()) throw Error(ErrorKind::kPreconditionViolated, "norm of the zero polynomial");
  if (n < 2) throw Error(ErrorKind::kPreconditionViolated, "product_all_roots requires n >= 2");
  BigInt value = 1;
  NormMethod method = NormMethod::kDivisorProduct;
  bool all_prime = true;
  for (auto d : divisors(n)) {
    if (d == 1) continue;
    NormReport part = norm_primitive(r, d);
    value *= part.value;
    if (part.method == NormMethod::kPrs) method = NormMethod::kPrs;
    all_prime = all_prime && part.method == NormMethod::kRecurrence;
  }
  if (method != NormMethod::kPrs && all_prime) method = NormMethod::kRecurrence;
  return make_report(r, n, std::move(value), method);
}

BigInt product_all_roots(const IntPoly& r, std::uint64_t n) { return all_roots_report(r, n).value; }

bool theorem1_verify(std::uint64_t n) {
  require_coprime_to_six(n, "theorem1_verify");
  const IntPoly r{1, -1, 1};
  return product_all_roots(r, n) == 1 && norm_primitive(r, n).is_unit;
}

bool theorem2_verify(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorKind::kPreconditionViolated,
                "theorem2_verify requires an odd prime, got " + std::to_string(p));
  }
  const BigInt expected = lucas(p);
  const IntPoly minus{1, -1, -1};
  const IntPoly plus{1, 1, -1};
  return norm_primitive(minus, p).value == expected && norm_primitive(plus, p).value == expected;
}

bool cosine_permutation_check(std::uint64_t n) {
  require_coprime_to_six(n, "cosine_permutation_check");
  const std::uint64_t period = 2 * n;
  std::vector<unsigned> hits(n, 0);
  for (std::uint64_t k = 1; k < n; ++k) {
    const std::uint64_t j = (3 * k) % period;
    const std::uint64_t folded = std::min(j, period - j);
    if (folded == 0 || folded >= n) return false;
    ++hits[folded];
  }
  for (std::uint64_t i = 1; i < n; ++i) {
    if (hits[i] != 1) return false;
  }
  return true;
}

}  // namespace cyclonorm
