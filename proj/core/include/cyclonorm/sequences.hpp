#pragma once

#include <cstdint>
#include <utility>

#include "cyclonorm/bigint.hpp"

namespace cyclonorm {

struct LucasValue {
  std::uint64_t index = 0;
  BigInt value;
};

/// (F(m), F(m+1)) by fast doubling.
std::pair<BigInt, BigInt> fibonacci_pair(std::uint64_t m);

/// L(m) = 2 F(m+1) - F(m), O(log m) multiplications.
BigInt lucas(std::uint64_t m);
LucasValue lucas_value(std::uint64_t m);

/// Scaled power-sum trace t_n of a x^2 + b x + c: t_0 = 2, t_1 = -b,
/// t_n = -b t_{n-1} - a c t_{n-2}. Computed by 2x2 matrix powering.
/// Requires a != 0.
BigInt quad_trace(const BigInt& a, const BigInt& b, const BigInt& c, std::uint64_t n);

}  // namespace cyclonorm
