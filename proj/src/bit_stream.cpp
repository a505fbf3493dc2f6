#include "liouville/bit_stream.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liouville {

namespace {

void require_bits(const Bits& bits) {
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument("bit stream digits must be 0 or 1");
  }
}

Bits minimal_period(const Bits& period) {
  const std::size_t n = period.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = period[i] == period[i - d];
    if (periodic) return Bits(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return period;
}

}  // namespace

BitStream::BitStream(Bits prefix, Bits period) : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("bit stream period must be nonempty");
  require_bits(prefix_);
  require_bits(period_);
  period_ = minimal_period(period_);
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    prefix_.pop_back();
  }
}

BitStream BitStream::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw std::invalid_argument("seed must have the form prefix|period");
  }
  return BitStream(parse_bits(text.substr(0, bar)), parse_bits(text.substr(bar + 1)));
}

std::uint8_t BitStream::at(std::size_t index) const {
  if (index < prefix_.size()) return prefix_[index];
  return period_[(index - prefix_.size()) % period_.size()];
}

std::size_t BitStream::decision_length(const BitStream& other) const {
  return std::max(prefix_.size(), other.prefix_.size()) + std::lcm(period_.size(), other.period_.size());
}

std::optional<std::size_t> BitStream::first_difference(const BitStream& other) const {
  const std::size_t n = decision_length(other);
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i) != other.at(i)) return i;
  }
  return std::nullopt;
}

BitStream BitStream::with_flipped(std::size_t index) const {
  std::size_t length = prefix_.size();
  if (index >= length) {
    const std::size_t periods = (index - length) / period_.size() + 1;
    length += periods * period_.size();
  }
  Bits prefix(length);
  for (std::size_t i = 0; i < length; ++i) prefix[i] = at(i);
  prefix[index] ^= 1;
  return BitStream(std::move(prefix), period_);
}

std::string BitStream::to_string() const {
  std::string out;
  for (auto b : prefix_) out.push_back(static_cast<char>('0' + b));
  out.push_back('|');
  for (auto b : period_) out.push_back(static_cast<char>('0' + b));
  return out;
}

std::optional<std::size_t> PairedBitSequence::first_difference(const PairedBitSequence& other) const {
  auto block = y_.first_difference(other.y_);
  if (!block) return std::nullopt;
  return 2 * *block;
}

PairedBitSequence PairedBitSequence::from_x_stream(const BitStream& x) {
  // Align the x-prefix to a whole number of blocks and the period to an even
  // length so that blocks repeat.
  std::size_t prefix_len = x.prefix().size() + x.prefix().size() % 2;
  std::size_t period_len = x.period().size() * (x.period().size() % 2 == 0 ? 1 : 2);
  Bits x_prefix(prefix_len);
  for (std::size_t i = 0; i < prefix_len; ++i) x_prefix[i] = x.at(i);
  Bits x_period(period_len);
  for (std::size_t i = 0; i < period_len; ++i) x_period[i] = x.at(prefix_len + i);
  if (!check_blocks(x_prefix).valid || !check_blocks(x_period).valid) {
    throw std::invalid_argument("sequence violates the one-1-per-block constraint");
  }
  Bits y_prefix(prefix_len / 2);
  for (std::size_t n = 0; n < y_prefix.size(); ++n) y_prefix[n] = x_prefix[2 * n + 1];
  Bits y_period(period_len / 2);
  for (std::size_t n = 0; n < y_period.size(); ++n) y_period[n] = x_period[2 * n + 1];
  return PairedBitSequence(BitStream(std::move(y_prefix), std::move(y_period)));
}

BitStream PairedBitSequence::x_stream() const {
  Bits prefix;
  for (std::size_t n = 0; n < y_.prefix().size(); ++n) {
    prefix.push_back(x(2 * n));
    prefix.push_back(x(2 * n + 1));
  }
  Bits period;
  for (std::size_t j = 0; j < y_.period().size(); ++j) {
    const std::size_t n = y_.prefix().size() + j;
    period.push_back(x(2 * n));
    period.push_back(x(2 * n + 1));
  }
  return BitStream(std::move(prefix), std::move(period));
}

PairedBitSequence decode_pairs(const BitStream& y) { return PairedBitSequence(y); }

// y_n = x_{2n+1}, read back through the x-sequence.
BitStream encode_pairs(const PairedBitSequence& x) {
  const BitStream& shape = x.generator();
  Bits prefix(shape.prefix().size());
  for (std::size_t n = 0; n < prefix.size(); ++n) prefix[n] = x.x(2 * n + 1);
  Bits period(shape.period().size());
  for (std::size_t j = 0; j < period.size(); ++j) period[j] = x.x(2 * (prefix.size() + j) + 1);
  return BitStream(std::move(prefix), std::move(period));
}

BlockCheck check_blocks(const Bits& prefix) {
  BlockCheck result;
  result.trailing_digit_ignored = prefix.size() % 2 != 0;
  for (std::size_t i = 0; i + 1 < prefix.size(); i += 2) {
    if (prefix[i] + prefix[i + 1] != 1) {
      result.valid = false;
      break;
    }
  }
  return result;
}

Bits parse_bits(std::string_view text) {
  Bits bits;
  for (char c : text) {
    if (c == ' ') continue;
    if (c != '0' && c != '1') throw std::invalid_argument("expected only 0/1 digits");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

}  // namespace liouville
