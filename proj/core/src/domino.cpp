#include "cyclonorm/domino.hpp"

#include <numeric>
#include <string>

#include "cyclonorm/error.hpp"

namespace cyclonorm {

BigInt DominoTable::total() const {
  BigInt s;
  for (const auto& c : counts) s += c;
  return s;
}

namespace {

BigInt closed_form(std::uint64_t n, std::uint64_t k, const BigInt& binom) {
  BigInt num;
  mpz_mul_ui(num.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(n));
  const auto den = static_cast<unsigned long>(n - k);
  if (!mpz_divisible_ui_p(num.get_mpz_t(), den)) {
    throw Error(ErrorKind::kInexactDivision, "n C(n-k, k) not divisible by n-k");
  }
  mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), den);
  return num;
}

}  // namespace

BigInt domino_count(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "cycle length must be positive");
  if (k > n / 2) {
    throw Error(ErrorKind::kOutOfRange,
                "k = " + std::to_string(k) + " exceeds n/2 for n = " + std::to_string(n));
  }
  if (k == 0) return 1;
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - k), static_cast<unsigned long>(k));
  return closed_form(n, k, binom);
}

namespace {

// Calls visit(k, part, factor) with D(n, k) = part * factor for k = 0..n/2
// in order. C(n-k, k) is stepped in k:
// C(n-j-1, j+1) = C(n-j, j) (n-2j)(n-2j-1) / ((j+1)(n-j)); each entry then
// goes through the checked n C(n-k, k) / (n-k) division.
template <class Visit>
void for_each_count(std::uint64_t n, Visit&& visit) {
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "cycle length must be positive");
  BigInt binom = 1;
  BigInt part = 1;
  visit(std::uint64_t{0}, part, 1UL);
  for (std::uint64_t k = 1; k <= n / 2; ++k) {
    const std::uint64_t j = k - 1;
    // Both factor pairs fit in an unsigned long for any n this is used with.
    mpz_mul_ui(binom.get_mpz_t(), binom.get_mpz_t(),
               static_cast<unsigned long>((n - 2 * j) * (n - 2 * j - 1)));
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k * (n - j)));
    // (n-k) | n C(n-k, k) iff (n-k)/g | C(n-k, k), g = gcd(n, n-k).
    const std::uint64_t g = std::gcd(n, k);
    const auto q = static_cast<unsigned long>((n - k) / g);
    if (!mpz_divisible_ui_p(binom.get_mpz_t(), q)) {
      throw Error(ErrorKind::kInexactDivision, "n C(n-k, k) not divisible by n-k");
    }
    mpz_divexact_ui(part.get_mpz_t(), binom.get_mpz_t(), q);
    visit(k, part, static_cast<unsigned long>(n / g));
  }
}

}  // namespace

DominoTable domino_table(std::uint64_t n) {
  DominoTable t{n, {}};
  t.counts.reserve(n / 2 + 1);
  for_each_count(n, [&](std::uint64_t, const BigInt& part, unsigned long factor) {
    t.counts.push_back(part * factor);
  });
  return t;
}

namespace {

// Visits every set of disjoint arcs {i, i+1} with first <= i < last - 1
// within cells [first, last), i.e. every matching of a path, and tallies
// placements by size (offset by the dominos already placed).
void enumerate_path(std::uint64_t cell, std::uint64_t last, std::uint64_t placed,
                    std::vector<std::uint64_t>& tally) {
  if (cell + 1 >= last) {
    ++tally[placed];
    return;
  }
  enumerate_path(cell + 1, last, placed, tally);
  enumerate_path(cell + 2, last, placed + 1, tally);
}

}  // namespace

DominoTable domino_enumerate(std::uint64_t n) {
  if (n < 3 || n > 30) {
    throw Error(ErrorKind::kOutOfRange,
                "brute-force enumeration needs 3 <= n <= 30, got " + std::to_string(n));
  }
  std::vector<std::uint64_t> tally(n / 2 + 1, 0);
  // Arc {n-1, 0} unused: a path on cells 0..n-1.
  enumerate_path(0, n, 0, tally);
  // Arc {n-1, 0} used: cells 0 and n-1 are covered, a path on 1..n-2 remains.
  enumerate_path(1, n - 1, 1, tally);

  DominoTable t{n, {}};
  for (auto c : tally) t.counts.emplace_back(static_cast<unsigned long>(c));
  return t;
}

BigInt signed_sum(std::uint64_t n) {
  if (n < 3) throw Error(ErrorKind::kPreconditionViolated, "signed_sum requires n >= 3");
  BigInt s;
  for_each_count(n, [&](std::uint64_t k, const BigInt& part, unsigned long factor) {
    if (k % 2 == 0) {
      mpz_addmul_ui(s.get_mpz_t(), part.get_mpz_t(), factor);
    } else {
      mpz_submul_ui(s.get_mpz_t(), part.get_mpz_t(), factor);
    }
  });
  return s;
}

CorollarySides corollary_sides(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "cycle length must be positive");
  CorollarySides sides;
  for_each_count(n, [&](std::uint64_t k, const BigInt& part, unsigned long factor) {
    if (k > 0) {
      BigInt& side = k % 2 == 0 ? sides.even_nonzero : sides.odd;
      mpz_addmul_ui(side.get_mpz_t(), part.get_mpz_t(), factor);
    }
  });
  return sides;
}

bool corollary_verify(std::uint64_t n) {
  if (n < 5 || std::gcd<std::uint64_t>(n, 6) != 1) {
    throw Error(ErrorKind::kPreconditionViolated,
                "corollary_verify requires n >= 5 with gcd(n, 6) = 1, got " + std::to_string(n));
  }
  const auto sides = corollary_sides(n);
  return sides.even_nonzero == sides.odd;
}

}  // namespace cyclonorm
