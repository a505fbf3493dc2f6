#include "liouville/rational.hpp"

#include <array>
#include <cctype>
#include <ostream>

namespace liouville {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_canonical(Integer numerator, Integer denominator) {
  Rational r;
  r.value_.get_num() = std::move(numerator);
  r.value_.get_den() = std::move(denominator);
  return r;
}

namespace {

bool parse_integer(std::string_view text, bool allow_sign, Integer& out) {
  std::size_t i = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (!parse_integer(text.substr(0, slash), /*allow_sign=*/true, num)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (slash != std::string_view::npos) {
    if (!parse_integer(text.substr(slash + 1), /*allow_sign=*/false, den) || den == 0) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return q;
}

Rational Rational::abs() const {
  Rational r = *this;
  mpq_abs(r.value_.get_mpq_t(), r.value_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  mpq_neg(r.value_.get_mpq_t(), r.value_.get_mpq_t());
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Integer factorial(unsigned n) {
  if (n > kFactorialCap) throw CapExceeded();
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

std::uint64_t factorial_u64(unsigned n) {
  if (n > kFactorialCap) throw CapExceeded();
  std::uint64_t result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer pow10(std::uint64_t exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

const Integer& pow10_factorial(unsigned k) {
  static const std::array<Integer, kDepthCap + 2> table = [] {
    std::array<Integer, kDepthCap + 2> t;
    for (unsigned i = 0; i < t.size(); ++i) t[i] = pow10(factorial_u64(i));
    return t;
  }();
  if (k >= table.size()) throw CapExceeded();
  return table[k];
}

Rational inverse_pow10(std::uint64_t exponent) {
  return Rational::from_canonical(Integer(1), pow10(exponent));
}

}  // namespace liouville
