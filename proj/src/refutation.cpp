#include "liouville/refutation.hpp"

#include <stdexcept>

#include "liouville/decimal_runs.hpp"

namespace liouville {

unsigned refutation_exponent(const Integer& q) {
  for (unsigned m = 1;; ++m) {
    if (q < pow10(factorial_u64(m) * m - 1)) return m;
  }
}

std::uint64_t stated_scan_bound(unsigned m) { return factorial_u64(m + 1) + factorial_u64(m) * m; }

std::uint64_t guaranteed_scan_bound(unsigned m) {
  return m % 2 == 0 ? factorial_u64(m + 2) : factorial_u64(m + 3);
}

IrrationalityCertificate refute_rational(const FactorialDigitNumber& x, const Rational& candidate) {
  if (candidate.sign() < 0 || candidate >= Rational(1)) {
    throw std::domain_error("candidate must lie in [0, 1)");
  }
  const Integer& b = candidate.denominator();
  if (b > pow10(kMaxRefutationDenominatorDigits)) {
    throw CapExceeded("candidate too large for refutation scan");
  }
  IrrationalityCertificate cert{candidate, 0, 0, 0, refutation_exponent(b)};
  const std::uint64_t limit = guaranteed_scan_bound(cert.m);

  Integer rem = candidate.numerator();
  Integer digit;
  for (std::uint64_t pos = 1; pos <= limit; ++pos) {
    rem *= 10;
    mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), b.get_mpz_t());
    const auto d = static_cast<std::uint8_t>(digit.get_ui());
    const std::uint8_t expected = x.digit_at(pos);
    if (d != expected) {
      cert.differing_position = pos;
      cert.member_digit = expected;
      cert.candidate_digit = d;
      return cert;
    }
  }
  throw std::logic_error("refutation scan exhausted its guaranteed bound");
}

bool check_certificate(const FactorialDigitNumber& x, const IrrationalityCertificate& cert) {
  const Rational& c = cert.candidate;
  if (cert.differing_position == 0 || cert.member_digit == cert.candidate_digit) return false;
  if (decimal_digit(c, cert.differing_position) != cert.candidate_digit) return false;
  if (x.digit_at(cert.differing_position) != cert.member_digit) return false;
  for (std::uint64_t pos = 1; pos < cert.differing_position; ++pos) {
    if (decimal_digit(c, pos) != x.digit_at(pos)) return false;
  }
  return true;
}

std::string certificate_line(const IrrationalityCertificate& cert) {
  return "REFUTE pos=" + std::to_string(cert.differing_position) +
         " member=" + std::to_string(cert.member_digit) +
         " candidate=" + std::to_string(cert.candidate_digit);
}

}  // namespace liouville
