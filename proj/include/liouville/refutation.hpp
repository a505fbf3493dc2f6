#pragma once

#include <cstdint>
#include <string>

#include "liouville/factorial_digits.hpp"
#include "liouville/rational.hpp"

namespace liouville {

// Decimal position where a rational provably differs from a member.
struct IrrationalityCertificate {
  Rational candidate;
  std::uint64_t differing_position = 0;
  std::uint8_t member_digit = 0;
  std::uint8_t candidate_digit = 0;
  // Least m with denominator < 10^{m! * m - 1}.
  unsigned m = 0;
};

inline constexpr unsigned kMaxRefutationDenominatorDigits = 6;

// Least m >= 1 with q < 10^{m! * m - 1}.
unsigned refutation_exponent(const Integer& q);

// (m+1)! + m! * m.
std::uint64_t stated_scan_bound(unsigned m);

// A candidate that agrees with a member through position (m+1)! - 1 has a
// zero remainder after position m!. The member's next 1 then lands at
// (m+2)! for even m and at most (m+3)! for odd m.
std::uint64_t guaranteed_scan_bound(unsigned m);

// First position where the expansions differ. Terminating candidates use the
// all-zeros tail. Requires 0 <= candidate < 1 (std::domain_error) and a
// denominator of at most 10^6 (CapExceeded, "candidate too large for
// refutation scan").
IrrationalityCertificate refute_rational(const FactorialDigitNumber& x, const Rational& candidate);

// Re-derives both digits at the reported position and checks that all
// earlier digits agree.
bool check_certificate(const FactorialDigitNumber& x, const IrrationalityCertificate& cert);

// "REFUTE pos=<k> member=<d> candidate=<d>".
std::string certificate_line(const IrrationalityCertificate& cert);

}  // namespace liouville
