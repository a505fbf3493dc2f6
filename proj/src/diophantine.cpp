#include "liouville/diophantine.hpp"

#include <stdexcept>

namespace liouville {

namespace {

// Tries p/q for the fractions nearest x; returns the first with a nonzero
// residue |aq - bp| satisfying residue * q^{n-1} < b.
std::optional<Approximant> try_denominator(const Integer& a, const Integer& b, const Integer& q,
                                           const Integer& q_pow) {
  const Integer aq = a * q;
  Integer lo;
  mpz_fdiv_q(lo.get_mpz_t(), aq.get_mpz_t(), b.get_mpz_t());
  for (Integer p : {Integer(lo), Integer(lo + 1)}) {
    Integer residue = aq - b * p;
    if (residue < 0) residue = -residue;
    if (residue != 0 && residue * q_pow < b) return Approximant{p, q};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Approximant> in_U_n(const Rational& x, unsigned n) {
  const Integer& a = x.numerator();
  const Integer& b = x.denominator();
  if (n == 0) {
    // q = 2: p = floor(2x) is within 1/2 unless 2x is an integer; then 2x + 1
    // is at distance exactly 1/2.
    const Rational twice = x * Rational(2);
    Integer p = twice.floor();
    if (twice.is_integer()) p += 1;
    return Approximant{p, Integer(2)};
  }
  if (n == 1) {
    if (b < 2) return std::nullopt;
    for (long q : {2L, 3L}) {
      if (auto hit = try_denominator(a, b, Integer(q), Integer(1))) return hit;
    }
    throw std::logic_error("first layer search missed a denominator");
  }
  Integer q_pow;
  unsigned long tried = 0;
  for (Integer q = 2;; ++q) {
    mpz_pow_ui(q_pow.get_mpz_t(), q.get_mpz_t(), n - 1);
    if (q_pow >= b) return std::nullopt;
    if (++tried > kMaxLayerSearch) throw CapExceeded("denominator too large for layer search");
    if (auto hit = try_denominator(a, b, q, q_pow)) return hit;
  }
}

LayerReport diophantine_layer(const Rational& x, unsigned n_max) {
  if (n_max > kMaxLayer) throw CapExceeded();
  LayerReport report{x, {}, 0};
  for (unsigned n = 0; n <= n_max; ++n) report.verdicts.push_back({n, in_U_n(x, n)});
  unsigned n = 0;
  while (n <= n_max ? report.verdicts[n].in_U() : in_U_n(x, n).has_value()) ++n;
  report.first_diophantine_layer = n;
  return report;
}

}  // namespace liouville
