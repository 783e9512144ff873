#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "cyclonorm/error.hpp"
#include "cyclonorm/polyring.hpp"
#include "cyclonorm/quadfield.hpp"

namespace cyclonorm {

namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

constexpr double kIntegralityWindow = 0.01;

}  // namespace

double class_number_real_estimate(std::uint64_t p, long precision_bits) {
  if (!is_prime(p) || p % 4 != 1) {
    throw Error(ErrorKind::kPreconditionViolated,
                "class_number_real requires a prime p = 1 (mod 4), got " + std::to_string(p));
  }
  const auto prec = static_cast<mpfr_prec_t>(precision_bits);
  const PellUnit unit = fundamental_unit(p);

  Real pi(prec), term(prec), sum(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_set_zero(sum.get(), 1);
  for (std::uint64_t a = 1; a < p; ++a) {
    const int chi = legendre(static_cast<std::int64_t>(a), p);
    mpfr_mul_ui(term.get(), pi.get(), static_cast<unsigned long>(a), MPFR_RNDN);
    mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(p), MPFR_RNDN);
    mpfr_sin(term.get(), term.get(), MPFR_RNDN);
    mpfr_log(term.get(), term.get(), MPFR_RNDN);
    if (chi > 0) {
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    } else {
      mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
  }

  // ln epsilon, epsilon = (x + y sqrt(p)) / 2.
  Real eps(prec), tmp(prec);
  mpfr_set_ui(tmp.get(), static_cast<unsigned long>(p), MPFR_RNDN);
  mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul_z(tmp.get(), tmp.get(), unit.y.get_mpz_t(), MPFR_RNDN);
  mpfr_add_z(eps.get(), tmp.get(), unit.x.get_mpz_t(), MPFR_RNDN);
  mpfr_div_ui(eps.get(), eps.get(), 2, MPFR_RNDN);
  mpfr_log(eps.get(), eps.get(), MPFR_RNDN);

  mpfr_mul_ui(eps.get(), eps.get(), 2, MPFR_RNDN);
  mpfr_div(sum.get(), sum.get(), eps.get(), MPFR_RNDN);
  mpfr_neg(sum.get(), sum.get(), MPFR_RNDN);
  return mpfr_get_d(sum.get(), MPFR_RNDN);
}

std::uint64_t class_number_real(std::uint64_t p) {
  long prec = std::max<long>(64, 16 + static_cast<long>(p));
  for (int attempt = 0; attempt < 2; ++attempt, prec *= 2) {
    const double h = class_number_real_estimate(p, prec);
    const double rounded = std::round(h);
    if (rounded >= 1 && std::fabs(h - rounded) < kIntegralityWindow) {
      return static_cast<std::uint64_t>(rounded);
    }
  }
  throw Error(ErrorKind::kAnalyticUnstable, "p = " + std::to_string(p));
}

}  // namespace cyclonorm
