#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace liouville {

using Integer = mpz_class;

// Largest n accepted by factorial(); guards every exponent of the form n!.
inline constexpr unsigned kFactorialCap = 12;
// Largest depth for materialized sums and enclosures (10^{(8+1)!} has 362880
// digits).
inline constexpr unsigned kDepthCap = 8;

class CapExceeded : public std::out_of_range {
 public:
  CapExceeded() : std::out_of_range("exponent cap exceeded") {}
  explicit CapExceeded(const std::string& what) : std::out_of_range(what) {}
};

// Exact signed rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& numerator, const Integer& denominator);

  // Adopts numerator/denominator without a gcd pass. The caller guarantees
  // lowest terms and a positive denominator.
  static Rational from_canonical(Integer numerator, Integer denominator);

  // Accepts "a" or "a/b" with an optional leading '-' and b > 0.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "a" for integers, "a/b" otherwise; all digits in full.
  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// n! for 0 <= n <= kFactorialCap.
Integer factorial(unsigned n);
// Same value as a machine integer (12! fits comfortably).
std::uint64_t factorial_u64(unsigned n);

Integer pow10(std::uint64_t exponent);
// 10^{k!} for k <= kDepthCap + 1, computed once and shared.
const Integer& pow10_factorial(unsigned k);

// 1/10^exponent.
Rational inverse_pow10(std::uint64_t exponent);

}  // namespace liouville
