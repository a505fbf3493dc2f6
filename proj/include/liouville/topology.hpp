#pragma once

#include <optional>
#include <vector>

#include "liouville/closed_set.hpp"
#include "liouville/rational.hpp"

namespace liouville {

// Set of accumulation points, in normal form.
ClosedSet derived_set(const ClosedSet& e);

inline constexpr unsigned kMaxDerivativeOrder = 64;

struct Derivative {
  ClosedSet set;
  // Least j < k with E^{(j)} = E^{(j+1)}, when iteration hit a fixpoint.
  std::optional<unsigned> stabilized_at;
};

// k-fold derived set, k <= 64.
Derivative cb_derivative(const ClosedSet& e, unsigned k);

struct CBRank {
  unsigned rank = 0;  // least r with E^{(r)} = E^{(r+1)}
  ClosedSet fixpoint;

  bool scattered() const { return fixpoint.is_empty_node(); }
};

CBRank cb_rank(const ClosedSet& e);

struct BendixsonDecomposition {
  ClosedSet kernel;  // perfect or empty
  // Closure of the countable part: the point and tower components left after
  // removing the perfect pieces. A tower limit can also lie in the kernel.
  ClosedSet scattered;

  bool in_scattered_part(const Rational& x) const { return member_of(x, scattered) && !member_of(x, kernel); }
};

BendixsonDecomposition bendixson_decompose(const ClosedSet& e);

ClosedSet condensation_set(const ClosedSet& e);

bool interior_is_empty(const ClosedSet& e);

enum class Perfectness { kPerfect, kNotPerfect, kEmptySet };

Perfectness perfectness(const ClosedSet& e);
bool is_perfect(const ClosedSet& e);
bool is_cantor(const ClosedSet& e);

struct Measure {
  bool infinite = false;
  Rational value;  // meaningful when finite

  std::string to_string() const { return infinite ? "inf" : value.to_string(); }
  friend bool operator==(const Measure&, const Measure&) = default;
};

// Lebesgue measure. Throws std::domain_error when components of positive
// measure overlap in a way the union rules cannot resolve.
Measure lebesgue_measure(const ClosedSet& e);

bool is_uncountable(const ClosedSet& e);

// A Cantor set inside e, or nullopt when e is countable. Uses the perfect
// kernel when it has empty interior, otherwise the middle third of the
// leftmost interval inside it.
std::optional<ClosedSet> find_cantor_subset(const ClosedSet& e);

// Rational points known to lie in e: listed points, endpoints and interior
// points of intervals, Cantor endpoints and quarter points, tower limits and
// images of child samples in the first few clusters. The Liouville leaf
// contributes none.
std::vector<Rational> sample_members(const ClosedSet& e, unsigned clusters = 3);

}  // namespace liouville
