#pragma once

#include <optional>
#include <vector>

#include "liouville/rational.hpp"

namespace liouville {

// p/q with 0 < |x - p/q| < q^{-n}, q >= 2.
struct Approximant {
  Integer p;
  Integer q;
};

// Upper limit on the number of denominators tried by one search.
inline constexpr unsigned long kMaxLayerSearch = 10'000'000;

// Membership of x in U_n, the set of reals admitting such an approximant.
// For n >= 2, |a/b - p/q| >= 1/(bq) whenever the difference is nonzero, so
// only q with q^{n-1} < b can work and, for each q, only the two fractions
// nearest x. Returns the approximant with the least q. Throws CapExceeded
// when the search would exceed kMaxLayerSearch denominators.
std::optional<Approximant> in_U_n(const Rational& x, unsigned n);

struct LayerVerdict {
  unsigned n = 0;
  std::optional<Approximant> approximant;

  bool in_U() const { return approximant.has_value(); }
};

struct LayerReport {
  Rational x;
  std::vector<LayerVerdict> verdicts;  // n = 0 .. n_max
  // Least n with x outside U_n; at most floor(log2 b) + 2.
  unsigned first_diophantine_layer = 0;
};

inline constexpr unsigned kMaxLayer = 12;

LayerReport diophantine_layer(const Rational& x, unsigned n_max);

}  // namespace liouville
