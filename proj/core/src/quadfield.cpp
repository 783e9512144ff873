#include "cyclonorm/quadfield.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "cyclonorm/error.hpp"
#include "cyclonorm/polyring.hpp"

namespace cyclonorm {

namespace {

bool one_mod_four(std::int64_t d) { return ((d % 4) + 4) % 4 == 1; }

void check_dstar(std::int64_t dstar) {
  if (dstar == 0 || dstar == 1 || mobius(static_cast<std::uint64_t>(std::llabs(dstar))) == 0) {
    throw Error(ErrorKind::kPreconditionViolated,
                "dstar must be squarefree and not 0 or 1, got " + std::to_string(dstar));
  }
}

void check_same_field(const QuadElem& x, const QuadElem& y) {
  if (x.dstar() != y.dstar()) {
    throw Error(ErrorKind::kPreconditionViolated, "quadratic elements from different fields");
  }
}

}  // namespace

QuadElem::QuadElem(BigInt a, BigInt b, int den, std::int64_t dstar)
    : a_(std::move(a)), b_(std::move(b)), dstar_(dstar) {
  check_dstar(dstar);
  if (den != 1 && den != 2) {
    throw Error(ErrorKind::kPreconditionViolated, "den must be 1 or 2");
  }
  try {
    normalize(BigInt(den));
  } catch (const Error&) {
    throw Error(ErrorKind::kPreconditionViolated, "not an integer of Q(sqrt(dstar))");
  }
}

QuadElem::QuadElem(BigInt a, BigInt b, BigInt den, std::int64_t dstar, bool)
    : a_(std::move(a)), b_(std::move(b)), dstar_(dstar) {
  normalize(std::move(den));
}

void QuadElem::normalize(BigInt den) {
  if (den == 0) throw Error(ErrorKind::kPreconditionViolated, "zero denominator");
  if (den < 0) {
    den = -den;
    a_ = -a_;
    b_ = -b_;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  if (den == 1) {
    den_ = 1;
    return;
  }
  const bool same_parity = mpz_even_p(a_.get_mpz_t()) == mpz_even_p(b_.get_mpz_t());
  if (den != 2 || !one_mod_four(dstar_) || !same_parity) {
    throw Error(ErrorKind::kInexactDivision, "result is not an algebraic integer");
  }
  den_ = 2;
}

QuadElem QuadElem::from_int(const BigInt& a, std::int64_t dstar) { return QuadElem(a, 0, 1, dstar); }

QuadElem QuadElem::root(std::int64_t dstar) { return QuadElem(0, 1, 1, dstar); }

QuadElem QuadElem::conj() const { return QuadElem(a_, -b_, BigInt(den_), dstar_, true); }

BigInt QuadElem::norm() const {
  BigInt num = a_ * a_ - BigInt(static_cast<long>(dstar_)) * b_ * b_;
  BigInt den2 = den_ * den_;
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den2.get_mpz_t());
  return num;
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, BigInt(den_), dstar_, true); }

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  check_same_field(x, y);
  return QuadElem(x.a_ * y.den_ + y.a_ * x.den_, x.b_ * y.den_ + y.b_ * x.den_,
                  BigInt(x.den_ * y.den_), x.dstar_, true);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) { return x + (-y); }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  check_same_field(x, y);
  const BigInt d = static_cast<long>(x.dstar_);
  return QuadElem(x.a_ * y.a_ + d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_,
                  BigInt(x.den_ * y.den_), x.dstar_, true);
}

QuadElem divide_exact(const QuadElem& x, const QuadElem& y) {
  check_same_field(x, y);
  const BigInt n = y.norm();
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "division by zero");
  const QuadElem num = x * y.conj();
  // num / n, written over the combined denominator.
  BigInt den = n * num.den();
  BigInt a = num.a();
  BigInt b = num.b();
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  if (den != 1 && den != 2 && den != -1 && den != -2) {
    throw Error(ErrorKind::kInexactDivision, "quotient is not an algebraic integer");
  }
  if (den < 0) {
    den = -den;
    a = -a;
    b = -b;
  }
  const bool same_parity = mpz_even_p(a.get_mpz_t()) == mpz_even_p(b.get_mpz_t());
  if (den == 2 && (!one_mod_four(x.dstar()) || !same_parity)) {
    throw Error(ErrorKind::kInexactDivision, "quotient is not an algebraic integer");
  }
  return QuadElem(std::move(a), std::move(b), static_cast<int>(den.get_si()), x.dstar());
}

QuadElem PellUnit::as_elem() const { return QuadElem(x, y, 2, p); }

int legendre(std::int64_t a, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorKind::kPreconditionViolated, "legendre requires an odd prime modulus");
  }
  const std::int64_t sp = static_cast<std::int64_t>(p);
  BigInt base = static_cast<long>(((a % sp) + sp) % sp);
  if (base == 0) return 0;
  BigInt r;
  const BigInt mod = static_cast<unsigned long>(p);
  const BigInt exp = static_cast<unsigned long>((p - 1) / 2);
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r == 1 ? 1 : -1;
}

namespace {

std::uint64_t isqrt(std::uint64_t d) {
  BigInt r;
  const BigInt v = static_cast<unsigned long>(d);
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r.get_ui();
}

bool is_square(const BigInt& v) { return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0; }

// State (m, q, a) of the integer recurrence for the continued fraction of
// sqrt(d): the complete quotient is (sqrt(d) + m) / q.
struct SqrtCF {
  std::uint64_t d;
  std::uint64_t a0;
  std::uint64_t m = 0;
  std::uint64_t q = 1;
  std::uint64_t a;

  explicit SqrtCF(std::uint64_t dd) : d(dd), a0(isqrt(dd)), a(a0) {}

  std::uint64_t next() {
    m = a * q - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    return a;
  }
};

}  // namespace

CFExpansion cf_sqrt(std::uint64_t d) {
  const std::uint64_t r = isqrt(d);
  if (r * r == d) throw Error(ErrorKind::kPerfectSquare, std::to_string(d) + " is a perfect square");
  SqrtCF cf(d);
  CFExpansion out{cf.a0, {}};
  do {
    out.period.push_back(cf.next());
  } while (out.period.back() != 2 * cf.a0);
  return out;
}

PellUnit fundamental_unit(std::uint64_t p) {
  if (!is_prime(p) || p % 4 != 1) {
    throw Error(ErrorKind::kPreconditionViolated,
                "fundamental_unit requires a prime p = 1 (mod 4), got " + std::to_string(p));
  }
  const BigInt bp = static_cast<unsigned long>(p);
  // Half-integer solutions with y = 1 and integer ones with y = 2 sit
  // below the range where every solution is a convergent of sqrt(p).
  for (int sgn : {-1, 1}) {
    BigInt v = bp + 4 * sgn;
    if (is_square(v)) {
      BigInt x;
      mpz_sqrt(x.get_mpz_t(), v.get_mpz_t());
      return {x, 1, sgn, static_cast<std::int64_t>(p)};
    }
  }
  for (int sgn : {-1, 1}) {
    BigInt v = 4 * bp + 4 * sgn;
    if (is_square(v)) {
      BigInt x;
      mpz_sqrt(x.get_mpz_t(), v.get_mpz_t());
      return {x, 2, sgn, static_cast<std::int64_t>(p)};
    }
  }

  SqrtCF cf(p);
  BigInt h_prev = 1, h = static_cast<unsigned long>(cf.a0);
  BigInt k_prev = 0, k = 1;
  for (;;) {
    const BigInt v = h * h - bp * k * k;
    if (v == 4 || v == -4) return {h, k, v > 0 ? 1 : -1, static_cast<std::int64_t>(p)};
    if (v == 1 || v == -1) {
      return {2 * h, 2 * k, v > 0 ? 1 : -1, static_cast<std::int64_t>(p)};
    }
    const BigInt a = static_cast<unsigned long>(cf.next());
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
}

std::uint64_t class_number_imaginary(std::uint64_t p) {
  if (p <= 3 || !is_prime(p) || p % 4 != 3) {
    throw Error(ErrorKind::kPreconditionViolated,
                "class_number_imaginary requires a prime p = 3 (mod 4), p > 3, got " +
                    std::to_string(p));
  }
  const std::int64_t sp = static_cast<std::int64_t>(p);
  std::uint64_t h = 0;
  for (std::int64_t a = 1; 3 * a * a <= sp; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if ((b - 1) % 2 != 0) continue;  // B^2 = -p (mod 4) forces B odd
      const std::int64_t num = b * b + sp;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

QuadElem gauss_period_relnorm(std::uint64_t p, std::int64_t k) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorKind::kPreconditionViolated, "gauss_period_relnorm requires an odd prime");
  }
  const std::int64_t sp = static_cast<std::int64_t>(p);
  const std::uint64_t kk = static_cast<std::uint64_t>(((k % sp) + sp) % sp);
  if (kk == 0) throw Error(ErrorKind::kPreconditionViolated, "k must be coprime to p");

  std::vector<bool> residue(p, false);
  for (std::uint64_t t = 1; t <= (p - 1) / 2; ++t) residue[(t * t) % p] = true;

  // Work in Z[x]/(x^p - 1); the product is fixed by x -> x^q for every
  // residue q, so its coefficients are constant on the two cosets.
  std::vector<BigInt> v(p);
  std::vector<BigInt> shifted(p);
  v[0] = 1;
  for (std::uint64_t j = 1; j < p; ++j) {
    if (!residue[j]) continue;
    const std::uint64_t e = (kk * j) % p;
    for (std::uint64_t i = 0; i < p; ++i) shifted[(i + e) % p] = v[i];
    for (std::uint64_t i = 0; i < p; ++i) v[i] -= shifted[i];
  }

  std::uint64_t nonresidue = 2;
  while (residue[nonresidue]) ++nonresidue;
  const BigInt c_res = v[1];
  const BigInt c_non = v[nonresidue];
  for (std::uint64_t j = 1; j < p; ++j) {
    if (v[j] != (residue[j] ? c_res : c_non)) {
      throw Error(ErrorKind::kCosetConstancyViolated,
                  "p = " + std::to_string(p) + ", k = " + std::to_string(k));
    }
  }
  // v0 + c_res eta + c_non conj(eta) with eta + conj(eta) = -1 and
  // eta - conj(eta) = sqrt(p*), i.e. eta = (-1 + sqrt(p*)) / 2.
  const std::int64_t dstar = p % 4 == 1 ? sp : -sp;
  return QuadElem(2 * v[0] - c_res - c_non, c_res - c_non, 2, dstar);
}

RealRelnormResult verify_real_relnorm(std::uint64_t p) {
  if (!is_prime(p) || p % 4 != 1) {
    throw Error(ErrorKind::kPreconditionViolated,
                "verify_real_relnorm requires a prime p = 1 (mod 4), got " + std::to_string(p));
  }
  const std::int64_t sp = static_cast<std::int64_t>(p);
  const QuadElem rel = gauss_period_relnorm(p, 1);
  QuadElem u = QuadElem::from_int(0, sp);
  try {
    u = divide_exact(rel, QuadElem::root(sp));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInexactDivision) throw;
    throw Error(ErrorKind::kNotUnitMultiple, "relative norm is not divisible by sqrt(p)");
  }

  const PellUnit unit = fundamental_unit(p);
  const QuadElem eps = unit.as_elem();
  const QuadElem eps_inv = unit.norm_sign > 0 ? eps.conj() : -eps.conj();
  const QuadElem one = QuadElem::from_int(1, sp);

  RealRelnormResult res;
  const std::int64_t bound = 4 * static_cast<std::int64_t>(isqrt(p) + 1);
  QuadElem down = u;  // u * eps^-i
  QuadElem up = u;    // u * eps^i
  bool found = false;
  for (std::int64_t i = 0; i <= bound && !found; ++i) {
    if (down == one || down == -one) {
      res.m = i;
      res.sign = down == one ? 1 : -1;
      found = true;
    } else if (up == one || up == -one) {
      res.m = -i;
      res.sign = up == one ? 1 : -1;
      found = true;
    }
    down = down * eps_inv;
    up = up * eps;
  }
  if (!found) {
    throw Error(ErrorKind::kNotUnitMultiple,
                "no exponent |m| <= " + std::to_string(bound) + " for p = " + std::to_string(p));
  }
  res.class_number = class_number_real(p);
  res.ok = static_cast<std::uint64_t>(std::llabs(res.m)) == res.class_number;
  return res;
}

int imag_relnorm_sign(std::uint64_t p, std::int64_t k) {
  if (p <= 3 || !is_prime(p) || p % 4 != 3) {
    throw Error(ErrorKind::kPreconditionViolated,
                "imaginary relative norm requires a prime p = 3 (mod 4), p > 3, got " +
                    std::to_string(p));
  }
  const int chi = legendre(k, p);
  if (chi == 0) throw Error(ErrorKind::kPreconditionViolated, "k must be coprime to p");
  const std::uint64_t h = class_number_imaginary(p);
  const int parity = ((h + 1) / 2) % 2 == 0 ? 1 : -1;
  return chi * parity;
}

bool verify_imag_relnorm(std::uint64_t p, std::int64_t k) {
  const int s = imag_relnorm_sign(p, k);
  const std::int64_t dstar = -static_cast<std::int64_t>(p);
  return gauss_period_relnorm(p, k) == QuadElem(0, s, 1, dstar);
}

}  // namespace cyclonorm
