#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liouville {

using Bits = std::vector<std::uint8_t>;

// Eventually periodic 0/1 sequence: `prefix` followed by `period` repeated
// forever. Always held in canonical form (minimal period, then minimal
// prefix), so two streams denote the same sequence iff they compare equal.
class BitStream {
 public:
  BitStream(Bits prefix, Bits period);

  // Textual form "prefix|period", e.g. "1|0" or "|1".
  static BitStream parse(std::string_view text);

  static BitStream constant(std::uint8_t bit) { return BitStream({}, {bit}); }

  std::uint8_t at(std::size_t index) const;

  const Bits& prefix() const { return prefix_; }
  const Bits& period() const { return period_; }

  // Number of leading terms after which both streams are periodic with a
  // common period; comparing that many terms decides equality.
  std::size_t decision_length(const BitStream& other) const;

  // First index at which the two sequences differ.
  std::optional<std::size_t> first_difference(const BitStream& other) const;

  // Same sequence with the term at `index` complemented.
  BitStream with_flipped(std::size_t index) const;

  std::string to_string() const;

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  Bits prefix_;
  Bits period_;
};

// Element of the constrained set of 0/1 sequences in which every block
// (x_{2n}, x_{2n+1}) contains exactly one 1. Block n is (0,1) when the
// underlying stream has y_n = 1 and (1,0) otherwise.
class PairedBitSequence {
 public:
  explicit PairedBitSequence(BitStream y) : y_(std::move(y)) {}

  // Builds the sequence from its x-space form; throws if some block does not
  // contain exactly one 1.
  static PairedBitSequence from_x_stream(const BitStream& x);

  std::uint8_t x(std::size_t index) const {
    const std::uint8_t y = y_.at(index / 2);
    return (index % 2 == 0) ? static_cast<std::uint8_t>(1 - y) : y;
  }

  const BitStream& generator() const { return y_; }

  // The x-sequence itself as an eventually periodic stream.
  BitStream x_stream() const;

  // First x-index at which the sequences differ (always even).
  std::optional<std::size_t> first_difference(const PairedBitSequence& other) const;

  friend bool operator==(const PairedBitSequence&, const PairedBitSequence&) = default;

 private:
  BitStream y_;
};

PairedBitSequence decode_pairs(const BitStream& y);
BitStream encode_pairs(const PairedBitSequence& x);

struct BlockCheck {
  bool valid = true;
  // Set when the input had odd length; the trailing digit was not judged.
  bool trailing_digit_ignored = false;
};

// Checks x_{2n} + x_{2n+1} = 1 on every complete block of a finite prefix.
BlockCheck check_blocks(const Bits& prefix);

// Parses a bare 0/1 string such as "011001" (spaces ignored).
Bits parse_bits(std::string_view text);

}  // namespace liouville
