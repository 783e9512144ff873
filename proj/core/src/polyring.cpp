#include "cyclonorm/polyring.hpp"

#include <algorithm>
#include <utility>

#include "cyclonorm/error.hpp"

namespace cyclonorm {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
  std::vector<BigInt> v(n + 1);
  v[0] -= 1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt IntPoly::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

BigInt IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

IntPoly IntPoly::reversed() const {
  std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  std::vector<BigInt> v(coeffs_);
  for (auto& a : v) a *= c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly add(const IntPoly& p, const IntPoly& q) {
  IntPoly r(p);
  r += q;
  return r;
}

IntPoly sub(const IntPoly& p, const IntPoly& q) {
  IntPoly r(p);
  r -= q;
  return r;
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  auto a = p.coeffs();
  auto b = q.coeffs();
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == 0) continue;
    for (std::size_t i = 0; i < a.size(); ++i) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

namespace {

// Nonzero (index, coefficient) pairs of q below its leading term; sparse
// divisors such as x^d - 1 then cost O(deg) per division.
std::vector<std::pair<std::size_t, const BigInt*>> lower_terms(const IntPoly& q) {
  std::vector<std::pair<std::size_t, const BigInt*>> terms;
  auto c = q.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] != 0) terms.emplace_back(i, &c[i]);
  }
  return terms;
}

}  // namespace

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::kPreconditionViolated, "division by the zero polynomial");
  if (p.is_zero()) return {};
  const std::size_t dp = *p.degree();
  const std::size_t dq = *q.degree();
  if (dp < dq) throw Error(ErrorKind::kInexactDivision, "divisor degree exceeds dividend degree");

  std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<BigInt> quot(dp - dq + 1);
  const BigInt& lead = q.coeffs().back();
  const bool unit_lead = lead == 1;
  const auto terms = lower_terms(q);

  for (std::size_t k = dp - dq + 1; k-- > 0;) {
    BigInt& top = rem[k + dq];
    if (top == 0) continue;
    if (unit_lead) {
      quot[k] = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
        throw Error(ErrorKind::kInexactDivision, "non-integral quotient coefficient");
      }
      mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    }
    top = 0;
    for (const auto& [i, c] : terms) {
      mpz_submul(rem[k + i].get_mpz_t(), quot[k].get_mpz_t(), c->get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < dq; ++i) {
    if (rem[i] != 0) throw Error(ErrorKind::kInexactDivision, "nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::kPreconditionViolated, "pseudo-division by the zero polynomial");
  if (p.is_zero()) return {};
  const std::size_t dq = *q.degree();
  if (*p.degree() < dq) return p;

  std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
  const BigInt& lead = q.coeffs().back();
  const auto terms = lower_terms(q);
  const std::size_t steps = *p.degree() - dq + 1;
  // Every step scales by lc(q), so the multiplier is exactly
  // lc(q)^(deg p - deg q + 1) even when a top coefficient is already zero.
  for (std::size_t k = steps; k-- > 0;) {
    BigInt top = rem[k + dq];
    rem[k + dq] = 0;
    if (lead != 1) {
      for (std::size_t i = 0; i < k + dq; ++i) rem[i] *= lead;
    }
    if (top == 0) continue;
    for (const auto& [i, c] : terms) {
      mpz_submul(rem[k + i].get_mpz_t(), top.get_mpz_t(), c->get_mpz_t());
    }
  }
  rem.resize(dq);
  return IntPoly(std::move(rem));
}

BigInt content(const IntPoly& p) {
  BigInt g;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly divide_exact(const IntPoly& p, const BigInt& c) {
  if (c == 0) throw Error(ErrorKind::kPreconditionViolated, "division by zero");
  std::vector<BigInt> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& a : v) {
    if (!mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t())) {
      throw Error(ErrorKind::kInexactDivision, "coefficient not divisible by scalar");
    }
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

BigInt eval_int(const IntPoly& p, const BigInt& a) {
  BigInt acc;
  auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= a;
    acc += c[i];
  }
  return acc;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "mobius(0)");
  int sign = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "divisors(0)");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "euler_phi(0)");
  std::uint64_t result = n;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

IntPoly cyclotomic(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "cyclotomic(0)");
  // Phi_n = prod_{d|n} (x^d - 1)^mu(n/d): multiply in the positive
  // binomials, then remove the negative ones by exact division.
  const auto divs = divisors(n);
  IntPoly acc = IntPoly::constant(1);
  for (auto d : divs) {
    if (mobius(n / d) == 1) acc = mul(acc, IntPoly::x_pow_minus_one(d));
  }
  for (auto d : divs) {
    if (mobius(n / d) == -1) acc = exact_div(acc, IntPoly::x_pow_minus_one(d));
  }
  return acc;
}

}  // namespace cyclonorm
