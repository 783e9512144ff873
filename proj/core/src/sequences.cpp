#include "cyclonorm/sequences.hpp"

#include <bit>

#include "cyclonorm/error.hpp"

namespace cyclonorm {

std::pair<BigInt, BigInt> fibonacci_pair(std::uint64_t m) {
  // Invariant: (f0, f1) = (F(j), F(j+1)) for j = leading bits of m read so far.
  BigInt f0 = 0;
  BigInt f1 = 1;
  for (int bit = std::bit_width(m); bit-- > 0;) {
    BigInt twice = 2 * f1 - f0;
    BigInt f2k = f0 * twice;              // F(2j)
    BigInt f2k1 = f0 * f0 + f1 * f1;      // F(2j+1)
    if ((m >> bit) & 1u) {
      f0 = f2k1;
      f1 = f2k + f2k1;
    } else {
      f0 = std::move(f2k);
      f1 = std::move(f2k1);
    }
  }
  return {f0, f1};
}

BigInt lucas(std::uint64_t m) {
  auto [fm, fm1] = fibonacci_pair(m);
  return 2 * fm1 - fm;
}

LucasValue lucas_value(std::uint64_t m) { return {m, lucas(m)}; }

namespace {

struct Mat2 {
  BigInt m00, m01, m10, m11;
};

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
          x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

}  // namespace

BigInt quad_trace(const BigInt& a, const BigInt& b, const BigInt& c, std::uint64_t n) {
  if (a == 0) throw Error(ErrorKind::kPreconditionViolated, "quad_trace requires a != 0");
  if (n == 0) return 2;
  // [t_n, t_{n-1}]^T = M^(n-1) [t_1, t_0]^T with M = [[-b, -ac], [1, 0]].
  Mat2 step{-b, -a * c, 1, 0};
  Mat2 acc{1, 0, 0, 1};
  for (std::uint64_t e = n - 1; e != 0; e >>= 1) {
    if (e & 1u) acc = acc * step;
    if (e > 1) step = step * step;
  }
  BigInt t1 = -b;
  return acc.m00 * t1 + acc.m01 * 2;
}

}  // namespace cyclonorm
