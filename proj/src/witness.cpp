#include "liouville/witness.hpp"

namespace liouville {

namespace {

Integer integer_power(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace

Witness liouville_witness(const FactorialDigitNumber& x, unsigned n) {
  if (n < 1 || n > kDepthCap) throw CapExceeded();
  Witness w;
  w.q = pow10_factorial(n);
  w.n = n;
  const Rational s = partial_sum(x, n);
  // s has denominator dividing q.
  w.p = s.numerator() * (w.q / s.denominator());
  return w;
}

bool verify_witness(const Enclosure& enc, const Witness& w) {
  if (w.q <= 1) throw std::invalid_argument("witness denominator must exceed 1");
  const Rational c(w.p, w.q);
  const Rational h(Integer(1), integer_power(w.q, w.n));
  const Rational left = c - h;
  const Rational right = c + h;

  if (enc.lo > left && enc.hi < c) return true;
  if (enc.lo > c && enc.hi < right) return true;

  if (enc.hi <= left || enc.lo >= right) return false;
  if (enc.lo == c && enc.hi == c) return false;
  throw InconclusiveEnclosure();
}

Witness certify_witness(const FactorialDigitNumber& x, Witness w) {
  w.verified = false;
  w.certified_depth = 0;
  for (unsigned depth = w.n + 2; depth <= kDepthCap; ++depth) {
    try {
      w.verified = verify_witness(bounding_interval(x, depth), w);
      w.certified_depth = depth;
      return w;
    } catch (const InconclusiveEnclosure&) {
    }
  }
  // The witness is exactly the depth-n partial sum iff it matches the one
  // constructed here; then alpha - p/q is the tail, which is positive since
  // every block holds a 1, and below tail_bound(n).
  const Witness own = liouville_witness(x, w.n);
  if (own.p * w.q != w.p * own.q) return w;
  const Rational h(Integer(1), integer_power(own.q, w.n));
  w.verified = tail_bound(w.n) < h;
  return w;
}

std::string witness_line(const Witness& w) {
  return "WITNESS n=" + std::to_string(w.n) + " p=" + w.p.get_str() + " q=" + w.q.get_str() +
         " ok=" + (w.verified ? "true" : "false");
}

}  // namespace liouville
