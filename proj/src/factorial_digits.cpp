#include "liouville/factorial_digits.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace liouville {

namespace {

void require_depth(unsigned n, unsigned min) {
  if (n < min || n > kDepthCap) throw CapExceeded();
}

// Builds N/D, skipping the gcd when D's only prime factors are 2, 3 and 5
// and N is coprime to all three.
Rational from_parts_over_235(Integer numerator, Integer denominator) {
  const bool coprime = mpz_fdiv_ui(numerator.get_mpz_t(), 2) != 0 &&
                       mpz_fdiv_ui(numerator.get_mpz_t(), 3) != 0 &&
                       mpz_fdiv_ui(numerator.get_mpz_t(), 5) != 0;
  if (coprime) return Rational::from_canonical(std::move(numerator), std::move(denominator));
  return Rational(numerator, denominator);
}

// Largest i <= n with x_{i-1} = 1, or 0 if there is none.
unsigned last_one(const FactorialDigitNumber& x, unsigned n) {
  for (unsigned i = n; i >= 1; --i) {
    if (x.term(i) == 1) return i;
  }
  return 0;
}

// Numerator of the partial sum of depth j over 10^{j!}.
Integer scaled_partial_sum(const FactorialDigitNumber& x, unsigned j) {
  Integer numerator = 0;
  const std::uint64_t top = factorial_u64(j);
  for (unsigned i = 1; i <= j; ++i) {
    if (x.term(i) == 1) numerator += pow10(top - factorial_u64(i));
  }
  return numerator;
}

}  // namespace

std::uint8_t FactorialDigitNumber::digit_at(std::uint64_t position) const {
  if (position == 0) throw std::invalid_argument("digit positions start at 1");
  std::uint64_t f = 1;
  for (std::uint64_t i = 1;; ++i) {
    if (f == position) return term(i);
    if (f > position / (i + 1)) return 0;  // next factorial exceeds position
    f *= i + 1;
    if (f > position) return 0;
  }
}

RunLengthDecimal FactorialDigitNumber::expansion(unsigned n) const {
  std::vector<DigitRun> runs;
  std::uint64_t covered = 0;
  for (unsigned i = 1; i <= n; ++i) {
    const std::uint64_t position = factorial_u64(i);
    runs.push_back({0, position - covered - 1});
    runs.push_back({term(i), 1});
    covered = position;
  }
  return RunLengthDecimal(std::move(runs));
}

Rational partial_sum(const FactorialDigitNumber& x, unsigned n) {
  require_depth(n, 1);
  const unsigned j = last_one(x, n);
  if (j == 0) return Rational(0);
  // The numerator ends in the digit 1, so the fraction is already reduced.
  return Rational::from_canonical(scaled_partial_sum(x, j), pow10_factorial(j));
}

const Rational& tail_bound(unsigned n) {
  static const std::array<Rational, kDepthCap + 1> table = [] {
    std::array<Rational, kDepthCap + 1> t;
    for (unsigned i = 0; i <= kDepthCap; ++i) {
      Integer denominator = pow10_factorial(i + 1);
      mpz_divexact_ui(denominator.get_mpz_t(), denominator.get_mpz_t(), 10);
      t[i] = Rational::from_canonical(Integer(1), denominator * 9);
    }
    return t;
  }();
  if (n > kDepthCap) throw CapExceeded();
  return table[n];
}

std::strong_ordering compare_members(const FactorialDigitNumber& a, const FactorialDigitNumber& b) {
  const auto index = a.generator().first_difference(b.generator());
  if (!index) return std::strong_ordering::equal;
  return a.generator().x(*index) <=> b.generator().x(*index);
}

Enclosure bounding_interval(const FactorialDigitNumber& x, unsigned n) {
  require_depth(n, 1);
  const Rational& width = tail_bound(n);
  const unsigned j = last_one(x, n);
  if (j == 0) return {Rational(0), width};
  Integer scaled = scaled_partial_sum(x, j);
  Rational lo = Rational::from_canonical(scaled, pow10_factorial(j));
  // lo = P/10^{j!}, width = 1/(9*10^K) with K = (n+1)! - 1 >= j!.
  const std::uint64_t k = factorial_u64(n + 1) - 1;
  Integer numerator = scaled * 9 * pow10(k - factorial_u64(j)) + 1;
  Integer denominator = width.denominator();
  return {std::move(lo), from_parts_over_235(std::move(numerator), std::move(denominator))};
}

Enclosure difference_enclosure(const FactorialDigitNumber& a, const FactorialDigitNumber& b, unsigned n) {
  const Enclosure ea = bounding_interval(a, n);
  const Enclosure eb = bounding_interval(b, n);
  return {ea.lo - eb.hi, ea.hi - eb.lo};
}

std::string render_decimal(const FactorialDigitNumber& x, std::uint64_t digits) {
  if (digits > kMaxRenderedDigits) throw CapExceeded("digit count above 10^6");
  std::string out(digits, '0');
  std::uint64_t position = 1;
  for (std::uint64_t i = 1; position <= digits; ++i) {
    out[position - 1] = static_cast<char>('0' + x.term(i));
    position *= i + 1;
  }
  return out;
}

}  // namespace liouville
