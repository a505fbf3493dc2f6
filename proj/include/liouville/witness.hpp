#pragma once

#include <stdexcept>
#include <string>

#include "liouville/factorial_digits.hpp"
#include "liouville/rational.hpp"

namespace liouville {

// (p, q, n) with 0 < |alpha - p/q| < 1/q^n claimed for some alpha.
struct Witness {
  Integer p;
  Integer q;
  unsigned n = 0;
  bool verified = false;
  // Enclosure depth that settled verification; 0 when it rests on the
  // positivity of the tail alone.
  unsigned certified_depth = 0;
};

class InconclusiveEnclosure : public std::runtime_error {
 public:
  InconclusiveEnclosure() : std::runtime_error("inconclusive: refine enclosure") {}
};

// p = 10^{n!} * partial_sum(x, n), q = 10^{n!}, 1 <= n <= 8. The fraction is
// left unreduced. The verified flag is left unset.
Witness liouville_witness(const FactorialDigitNumber& x, unsigned n);

// True if [lo, hi] lies inside (c - h, c) or (c, c + h) with c = p/q and
// h = q^{-n}; false if it lies inside the complement. Otherwise throws
// InconclusiveEnclosure. Requires q > 1.
bool verify_witness(const Enclosure& enc, const Witness& w);

// Runs verify_witness against enclosures of x at depths n+2, n+3, ... up to
// the depth cap and records the outcome. Past the cap it checks the chain
// 0 < tail < tail_bound(n) < q^{-n} directly.
Witness certify_witness(const FactorialDigitNumber& x, Witness w);

// "WITNESS n=<n> p=<p> q=<q> ok=<bool>" with integers in full.
std::string witness_line(const Witness& w);

}  // namespace liouville
