#include "liouville/decimal_runs.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace liouville {

namespace {

// Number of leading digits of a/b before its expansion becomes purely
// periodic: max of the multiplicities of 2 and 5 in b.
std::uint64_t preperiod_length(const Integer& denominator) {
  Integer d = denominator;
  std::uint64_t twos = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
    ++twos;
  }
  std::uint64_t fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    ++fives;
  }
  return std::max(twos, fives);
}

// a * 10^k mod b.
Integer remainder_after(const Integer& a, std::uint64_t k, const Integer& b) {
  Integer ten(10);
  Integer power;
  Integer exponent(std::to_string(k));
  mpz_powm(power.get_mpz_t(), ten.get_mpz_t(), exponent.get_mpz_t(), b.get_mpz_t());
  Integer result = (a * power) % b;
  return result;
}

void require_unit_interval(const Rational& r) {
  if (r.sign() < 0 || r >= Rational(1)) {
    throw std::domain_error("decimal expansion requires a value in [0, 1)");
  }
}

}  // namespace

RunLengthDecimal::RunLengthDecimal(std::vector<DigitRun> runs) {
  for (const auto& run : runs) {
    if (run.digit > 9) throw std::invalid_argument("decimal digit out of range");
    if (run.length == 0) continue;
    if (!runs_.empty() && runs_.back().digit == run.digit) {
      runs_.back().length += run.length;
    } else {
      runs_.push_back(run);
    }
  }
  while (!runs_.empty() && runs_.back().digit == 0) runs_.pop_back();
}

std::uint64_t RunLengthDecimal::length() const {
  std::uint64_t total = 0;
  for (const auto& run : runs_) total += run.length;
  return total;
}

std::uint8_t RunLengthDecimal::digit_at(std::uint64_t position) const {
  if (position == 0) throw std::invalid_argument("digit positions start at 1");
  std::uint64_t start = 1;
  for (const auto& run : runs_) {
    if (position < start + run.length) return run.digit;
    start += run.length;
  }
  return 0;
}

std::strong_ordering RunLengthDecimal::compare(const Rational& r) const {
  if (r.sign() < 0) return std::strong_ordering::greater;
  if (r >= Rational(1)) return std::strong_ordering::less;

  const Integer& b = r.denominator();
  const std::uint64_t periodic_from = preperiod_length(b) + 1;
  // rem = a * 10^{position-1} mod b; the digit at `position` is
  // floor(10 * rem / b).
  Integer rem = r.numerator();
  std::uint64_t position = 1;

  for (const auto& run : runs_) {
    const std::uint64_t run_end = position + run.length;  // exclusive
    std::optional<Integer> cycle_start;
    while (position < run_end) {
      if (!cycle_start && position >= periodic_from) cycle_start = rem;
      Integer scaled = rem * 10;
      Integer digit;
      mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), b.get_mpz_t());
      if (digit != run.digit) {
        return run.digit < digit ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      ++position;
      if (cycle_start && rem == *cycle_start && position < run_end) {
        // A full period of r matched this run's digit, so r keeps producing
        // it to the end of the run.
        rem = remainder_after(r.numerator(), run_end - 1, b);
        position = run_end;
      }
    }
  }
  // Past the last run this value has only zeros; r has a later nonzero digit
  // iff its remainder is nonzero.
  return rem == 0 ? std::strong_ordering::equal : std::strong_ordering::less;
}

Rational RunLengthDecimal::to_rational(std::uint64_t max_length) const {
  const std::uint64_t total = length();
  if (total > max_length) throw CapExceeded();
  Integer numerator = 0;
  for (const auto& run : runs_) {
    // Append `length` copies of the digit: N * 10^len + d * (10^len - 1) / 9.
    const Integer scale = pow10(run.length);
    numerator = numerator * scale + Integer(run.digit) * (scale - 1) / 9;
  }
  return Rational(numerator, pow10(total));
}

std::string RunLengthDecimal::to_string() const {
  std::string out = "0.";
  if (runs_.empty()) return out + "0";
  for (const auto& run : runs_) {
    out += "[" + std::to_string(run.digit) + "x" + std::to_string(run.length) + "]";
  }
  return out;
}

std::uint8_t decimal_digit(const Rational& r, std::uint64_t position) {
  require_unit_interval(r);
  if (position == 0) throw std::invalid_argument("digit positions start at 1");
  const Integer& b = r.denominator();
  Integer scaled = remainder_after(r.numerator(), position - 1, b) * 10;
  Integer digit = scaled / b;
  return static_cast<std::uint8_t>(digit.get_ui());
}

}  // namespace liouville
