#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "liouville/bit_stream.hpp"
#include "liouville/decimal_runs.hpp"
#include "liouville/rational.hpp"

namespace liouville {

// The real number sum_{i>=1} x_{i-1} / 10^{i!} for a paired bit sequence x.
// Its only possibly nonzero decimal digits sit at positions 1!, 2!, 3!, ...
class FactorialDigitNumber {
 public:
  explicit FactorialDigitNumber(PairedBitSequence generator) : generator_(std::move(generator)) {}

  // Seed in y-space, "prefix|period".
  static FactorialDigitNumber from_seed(std::string_view seed) {
    return FactorialDigitNumber(decode_pairs(BitStream::parse(seed)));
  }

  const PairedBitSequence& generator() const { return generator_; }

  // x_{i-1}, the digit placed at position i!.
  std::uint8_t term(std::uint64_t i) const { return generator_.x(i - 1); }

  std::uint8_t digit_at(std::uint64_t position) const;

  // Digits through position n! (the partial sum of depth n) as runs.
  RunLengthDecimal expansion(unsigned n) const;

  friend bool operator==(const FactorialDigitNumber&, const FactorialDigitNumber&) = default;

 private:
  PairedBitSequence generator_;
};

// Closed rational interval known to contain a real number.
struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
};

// sum_{i=1}^{n} x_{i-1}/10^{i!}, 1 <= n <= 8.
Rational partial_sum(const FactorialDigitNumber& x, unsigned n);

// (10/9) * 10^{-(n+1)!}, 0 <= n <= 8: strict bound on any tail
// |sum_{i>n} z_i/10^{i!}| with |z_i| <= 1.
const Rational& tail_bound(unsigned n);

// Orders members by value. Equal iff the generators coincide; otherwise the
// first differing digit decides, since its term dominates the whole tail.
std::strong_ordering compare_members(const FactorialDigitNumber& a, const FactorialDigitNumber& b);

// [partial_sum(x, n), partial_sum(x, n) + tail_bound(n)]; the value lies
// strictly inside.
Enclosure bounding_interval(const FactorialDigitNumber& x, unsigned n);

// Encloses a - b using depth-n enclosures of both.
Enclosure difference_enclosure(const FactorialDigitNumber& a, const FactorialDigitNumber& b, unsigned n);

inline constexpr std::uint64_t kMaxRenderedDigits = 1'000'000;

// First `digits` decimal digits after the point, most significant first.
std::string render_decimal(const FactorialDigitNumber& x, std::uint64_t digits);

}  // namespace liouville
