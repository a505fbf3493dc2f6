#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "liouville/bit_stream.hpp"
#include "liouville/closed_set.hpp"
#include "liouville/factorial_digits.hpp"
#include "liouville/rational.hpp"

namespace liouville {

using Rng = std::mt19937_64;

// Eventually periodic y-stream with prefix length <= 6 and period length
// 1..6.
BitStream random_stream(Rng& rng);
FactorialDigitNumber random_member(Rng& rng);

// Two members with different generators.
std::pair<FactorialDigitNumber, FactorialDigitNumber> random_distinct_pair(Rng& rng);

// A member agreeing with `a` on x_0 .. x_{m-1}.
FactorialDigitNumber random_member_agreeing(Rng& rng, const FactorialDigitNumber& a, unsigned m);

// p/q with q uniform in [2, max_den] and p uniform in [1, q-1], reduced.
Rational random_unit_rational(Rng& rng, std::uint64_t max_den);

// a/b with b uniform in [1, max_den] and a uniform in [-2b, 2b], reduced.
Rational random_rational(Rng& rng, std::uint64_t max_den);

struct ExprOptions {
  unsigned max_depth = 3;
  bool allow_rays = true;
  bool allow_liouville = true;
};

// A valid random expression. Tower children are rescaled onto [1, 2] and
// paired with |ratio| <= 1/2 so that clusters never overlap.
ClosedSet random_expression(Rng& rng, const ExprOptions& options = {});

// A random expression with a nonempty perfect kernel.
ClosedSet random_uncountable_expression(Rng& rng, const ExprOptions& options = {});

// Nested tower of depth d over a single point.
ClosedSet nested_tower(unsigned depth);

}  // namespace liouville
