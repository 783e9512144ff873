#include <utility>

#include "cyclonorm/error.hpp"
#include "cyclonorm/norms.hpp"

namespace cyclonorm {

// Subresultant PRS (Collins / Brown), tracking the (-1)^(deg A deg B)
// sign of every swap so the result matches lc(f)^deg(g) prod g(roots f).
BigInt resultant_prs(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::kUndefined, "resultant of the zero polynomial");
  const std::size_t df = *f.degree();
  const std::size_t dg = *g.degree();
  if (df == 0) return pow(f.leading(), dg);
  if (dg == 0) return pow(g.leading(), df);

  const BigInt cf = content(f);
  const BigInt cg = content(g);
  IntPoly a = divide_exact(f, cf);
  IntPoly b = divide_exact(g, cg);
  const BigInt t = pow(cf, dg) * pow(cg, df);

  int sign = 1;
  if (df < dg) {
    std::swap(a, b);
    if (df % 2 == 1 && dg % 2 == 1) sign = -sign;
  }

  BigInt gg = 1;
  BigInt h = 1;
  for (;;) {
    const std::size_t da = *a.degree();
    const std::size_t db = *b.degree();
    const std::size_t delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;

    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_exact(r, gg * pow(h, delta));

    gg = a.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      BigInt num = pow(gg, delta);
      BigInt den = pow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }

    if (*b.degree() == 0) {
      const std::size_t dA = *a.degree();
      BigInt num = pow(b.leading(), dA);
      BigInt den = pow(h, dA - 1);
      BigInt last;
      mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return sign * t * last;
    }
  }
}

}  // namespace cyclonorm
