#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cyclonorm {

using BigInt = mpz_class;

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

inline BigInt pow(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace cyclonorm
