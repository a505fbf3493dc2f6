#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "liouville/rational.hpp"

namespace liouville {

struct DigitRun {
  std::uint8_t digit = 0;
  std::uint64_t length = 0;

  friend bool operator==(const DigitRun&, const DigitRun&) = default;
};

// A number in [0, 1) whose decimal digits after the point are given as runs
// of equal digits, followed by zeros forever. Positions are 1-based and may
// be far beyond anything that could be materialized as an integer.
class RunLengthDecimal {
 public:
  RunLengthDecimal() = default;
  explicit RunLengthDecimal(std::vector<DigitRun> runs);

  const std::vector<DigitRun>& runs() const { return runs_; }

  // Position of the last digit covered by a run (later digits are 0).
  std::uint64_t length() const;
  std::uint8_t digit_at(std::uint64_t position) const;
  bool is_zero() const { return runs_.empty(); }

  // Exact comparison of this value against r. Cost is bounded by the number
  // of runs times the period of r's expansion, independent of run lengths.
  std::strong_ordering compare(const Rational& r) const;

  // Exact value; throws CapExceeded when length() > max_length.
  Rational to_rational(std::uint64_t max_length = 362880) const;

  // Compact text, e.g. "0.[0x120][9x600]".
  std::string to_string() const;

  friend bool operator==(const RunLengthDecimal&, const RunLengthDecimal&) = default;

 private:
  std::vector<DigitRun> runs_;
};

// Decimal digit of r at 1-based `position` after the point, using the
// terminating expansion for decimal fractions. Requires 0 <= r < 1.
std::uint8_t decimal_digit(const Rational& r, std::uint64_t position);

}  // namespace liouville
