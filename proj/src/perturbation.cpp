#include "liouville/perturbation.hpp"

#include <stdexcept>

namespace liouville {

unsigned perturbation_block(const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
  for (unsigned n = 1;; ++n) {
    if (2 * n + 2 > kFactorialCap) throw CapExceeded("epsilon below resolution cap");
    if (Rational(pow10(2 * n)) * epsilon > Rational(2)) return n;
  }
}

RunLengthDecimal Perturbation::distance() const {
  return RunLengthDecimal({{0, lead_position}, {9, trail_position - lead_position}});
}

Perturbation perturbation(const FactorialDigitNumber& a, const Rational& epsilon) {
  const unsigned n = perturbation_block(epsilon);
  const BitStream& y = a.generator().generator();
  FactorialDigitNumber b(PairedBitSequence(y.with_flipped(n)));
  Perturbation p{a, std::move(b), n, factorial_u64(2 * n + 1), factorial_u64(2 * n + 2), 0};
  p.sign = a.generator().x(2 * n) == 1 ? 1 : -1;
  return p;
}

FactorialDigitNumber perturb(const FactorialDigitNumber& a, const Rational& epsilon) {
  return perturbation(a, epsilon).perturbed;
}

const Rational& agreement_bound(unsigned m) { return tail_bound(m); }

Rational separation_bound(unsigned m) {
  if (m < 1 || m > kDepthCap - 1) throw CapExceeded();
  return inverse_pow10(factorial_u64(m)) - inverse_pow10(factorial_u64(m + 1)) - tail_bound(m + 1);
}

Enclosure distance_enclosure(const FactorialDigitNumber& a, const FactorialDigitNumber& b, unsigned n) {
  Enclosure d = difference_enclosure(a, b, n);
  if (d.lo.sign() >= 0) return d;
  if (d.hi.sign() <= 0) return {-d.hi, -d.lo};
  return {Rational(0), max(-d.lo, d.hi)};
}

}  // namespace liouville
