#pragma once

#include <cstdint>

#include "liouville/decimal_runs.hpp"
#include "liouville/factorial_digits.hpp"
#include "liouville/rational.hpp"

namespace liouville {

// Smallest N >= 1 with 10^{2N} * epsilon > 2. Throws std::invalid_argument
// for epsilon <= 0 and CapExceeded ("epsilon below resolution cap") when the
// flipped digits x_{2N}, x_{2N+1} would sit beyond position 12!.
unsigned perturbation_block(const Rational& epsilon);

// Result of flipping block N of a member: the digits x_{2N} and x_{2N+1},
// which sit at decimal positions (2N+1)! and (2N+2)!.
struct Perturbation {
  FactorialDigitNumber original;
  FactorialDigitNumber perturbed;
  unsigned block = 0;
  std::uint64_t lead_position = 0;
  std::uint64_t trail_position = 0;
  // Sign of original - perturbed.
  int sign = 0;

  // |original - perturbed| = 10^{-lead} - 10^{-trail}, exactly.
  RunLengthDecimal distance() const;
};

Perturbation perturbation(const FactorialDigitNumber& a, const Rational& epsilon);

// A member b != a with |a - b| < epsilon.
FactorialDigitNumber perturb(const FactorialDigitNumber& a, const Rational& epsilon);

// (10/9) * 10^{-(m+1)!} for m <= 8. Members agreeing on x_0 .. x_{m-1}
// differ by strictly less than this.
const Rational& agreement_bound(unsigned m);

// 10^{-m!} - 10^{-(m+1)!} - (10/9) * 10^{-(m+2)!} for 1 <= m <= 7. Members
// whose distance is at most this agree on x_0 .. x_{m-1}.
Rational separation_bound(unsigned m);

// Encloses |a - b| from depth-n enclosures of both.
Enclosure distance_enclosure(const FactorialDigitNumber& a, const FactorialDigitNumber& b, unsigned n);

}  // namespace liouville
