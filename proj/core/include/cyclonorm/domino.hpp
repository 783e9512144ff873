#pragma once

#include <cstdint>
#include <vector>

#include "cyclonorm/bigint.hpp"

namespace cyclonorm {

/// counts[k] = number of ways to place k pairwise-disjoint dominos on a
/// labeled cycle of n cells, k = 0..n/2.
struct DominoTable {
  std::uint64_t n = 0;
  std::vector<BigInt> counts;

  BigInt total() const;
};

/// D(n, k) = n C(n-k, k) / (n-k), exact division checked. D(n, 0) = 1.
/// Throws kOutOfRange when k > n/2.
BigInt domino_count(std::uint64_t n, std::uint64_t k);

/// Closed-form table for any n >= 1.
DominoTable domino_table(std::uint64_t n);

/// Exhaustive enumeration for 3 <= n <= 30 (kOutOfRange otherwise).
DominoTable domino_enumerate(std::uint64_t n);

/// sum_k (-1)^k D(n, k), n >= 3.
BigInt signed_sum(std::uint64_t n);

struct CorollarySides {
  BigInt even_nonzero;  // k even, k >= 2
  BigInt odd;
};

CorollarySides corollary_sides(std::uint64_t n);

/// Requires n >= 5 and gcd(n, 6) = 1.
bool corollary_verify(std::uint64_t n);

}  // namespace cyclonorm
