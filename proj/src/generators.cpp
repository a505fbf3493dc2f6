#include "liouville/generators.hpp"

#include <array>

namespace liouville {

namespace {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

Bits random_bits(Rng& rng, std::size_t n) {
  Bits bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(uniform(rng, 0, 1));
  return bits;
}

template <class T, std::size_t N>
const T& pick(Rng& rng, const std::array<T, N>& options) {
  return options[uniform(rng, 0, N - 1)];
}

Rational small_rational(Rng& rng) {
  static const std::array<long, 8> dens = {1, 2, 3, 4, 5, 6, 8, 9};
  const long num = static_cast<long>(uniform(rng, 0, 12)) - 6;
  return Rational(Integer(num), Integer(pick(rng, dens)));
}

Rational positive_length(Rng& rng) {
  static const std::array<long, 5> dens = {1, 2, 3, 4, 9};
  return Rational(Integer(static_cast<long>(uniform(rng, 1, 3))), Integer(pick(rng, dens)));
}

// Affine copy of a nonempty bounded expression with hull exactly [1, 2], or
// the point 1 when the hull is a single point.
ClosedSet onto_unit_cluster(const ClosedSet& child) {
  const Hull h = *hull(child);
  if (*h.lo == *h.hi) return ClosedSet::affine(AffineMap{Rational(1), Rational(1) - *h.lo}, child);
  const Rational m = Rational(1) / (*h.hi - *h.lo);
  return ClosedSet::affine(AffineMap{m, Rational(1) - *h.lo * m}, child);
}

ClosedSet random_leaf(Rng& rng, const ExprOptions& options) {
  for (;;) {
    switch (uniform(rng, 0, 9)) {
      case 0:
      case 1:
      case 2: {
        std::vector<Rational> pts;
        const auto n = uniform(rng, 1, 3);
        for (std::uint64_t i = 0; i < n; ++i) pts.push_back(small_rational(rng));
        return ClosedSet::points(std::move(pts));
      }
      case 3:
      case 4: {
        Rational a = small_rational(rng);
        return ClosedSet::interval(a, a + positive_length(rng));
      }
      case 5:
      case 6: {
        Rational a = small_rational(rng);
        return ClosedSet::cantor(a, a + positive_length(rng));
      }
      case 7:
        if (!options.allow_rays) continue;
        return ClosedSet::ray(uniform(rng, 0, 1) ? RayDirection::kLeft : RayDirection::kRight, small_rational(rng));
      case 8:
        if (!options.allow_liouville) continue;
        return ClosedSet::sliouville();
      default:
        return ClosedSet::empty();
    }
  }
}

ClosedSet random_tower(Rng& rng, const ExprOptions& options, unsigned depth);

ClosedSet random_expr(Rng& rng, const ExprOptions& options, unsigned depth) {
  if (depth == 0) return random_leaf(rng, options);
  switch (uniform(rng, 0, 5)) {
    case 0:
    case 1:
      return random_tower(rng, options, depth);
    case 2: {
      std::vector<ClosedSet> parts;
      const auto n = uniform(rng, 2, 3);
      for (std::uint64_t i = 0; i < n; ++i) parts.push_back(random_expr(rng, options, depth - 1));
      return ClosedSet::union_of(std::move(parts));
    }
    case 3: {
      static const std::array<Rational, 5> slopes = {Rational(2), Rational(-1), Rational(1) / Rational(2),
                                                     Rational(-3), Rational(3) / Rational(2)};
      return ClosedSet::affine(AffineMap{pick(rng, slopes), small_rational(rng)}, random_expr(rng, options, depth - 1));
    }
    default:
      return random_leaf(rng, options);
  }
}

ClosedSet random_tower(Rng& rng, const ExprOptions& options, unsigned depth) {
  static const std::array<Rational, 6> ratios = {Rational(1) / Rational(2),  Rational(1) / Rational(3),
                                                 Rational(-1) / Rational(2), Rational(-1) / Rational(3),
                                                 Rational(1) / Rational(4),  Rational(2) / Rational(5)};
  static const std::array<Rational, 5> scales = {Rational(1), Rational(-1), Rational(1) / Rational(2), Rational(2),
                                                 Rational(-3) / Rational(2)};
  ExprOptions bounded = options;
  bounded.allow_rays = false;
  ClosedSet child = normalize(random_expr(rng, bounded, depth - 1));
  if (child.is_empty_node()) child = ClosedSet::points({Rational(1)});
  return ClosedSet::tower(small_rational(rng), pick(rng, scales), pick(rng, ratios), onto_unit_cluster(child));
}

}  // namespace

BitStream random_stream(Rng& rng) {
  Bits prefix = random_bits(rng, uniform(rng, 0, 6));
  Bits period = random_bits(rng, uniform(rng, 1, 6));
  return BitStream(std::move(prefix), std::move(period));
}

FactorialDigitNumber random_member(Rng& rng) { return FactorialDigitNumber(PairedBitSequence(random_stream(rng))); }

std::pair<FactorialDigitNumber, FactorialDigitNumber> random_distinct_pair(Rng& rng) {
  for (;;) {
    FactorialDigitNumber a = random_member(rng);
    FactorialDigitNumber b = random_member(rng);
    if (!(a == b)) return {std::move(a), std::move(b)};
  }
}

FactorialDigitNumber random_member_agreeing(Rng& rng, const FactorialDigitNumber& a, unsigned m) {
  // x_0 .. x_{m-1} live in blocks 0 .. ceil(m/2) - 1.
  const std::size_t shared = (m + 1) / 2;
  const BitStream& y = a.generator().generator();
  Bits prefix(shared);
  for (std::size_t i = 0; i < shared; ++i) prefix[i] = y.at(i);
  const BitStream tail = random_stream(rng);
  prefix.insert(prefix.end(), tail.prefix().begin(), tail.prefix().end());
  return FactorialDigitNumber(PairedBitSequence(BitStream(std::move(prefix), tail.period())));
}

Rational random_unit_rational(Rng& rng, std::uint64_t max_den) {
  const auto q = uniform(rng, 2, max_den);
  const auto p = uniform(rng, 1, q - 1);
  return Rational(Integer(std::to_string(p), 10), Integer(std::to_string(q), 10));
}

Rational random_rational(Rng& rng, std::uint64_t max_den) {
  const auto b = uniform(rng, 1, max_den);
  const auto a = static_cast<long>(uniform(rng, 0, 4 * b)) - static_cast<long>(2 * b);
  return Rational(Integer(a), Integer(std::to_string(b), 10));
}

ClosedSet random_expression(Rng& rng, const ExprOptions& options) {
  return random_expr(rng, options, options.max_depth);
}

ClosedSet random_uncountable_expression(Rng& rng, const ExprOptions& options) {
  ClosedSet perfect;
  switch (uniform(rng, 0, 4)) {
    case 0: {
      Rational a = small_rational(rng);
      perfect = ClosedSet::interval(a, a + positive_length(rng));
      break;
    }
    case 1: {
      Rational a = small_rational(rng);
      perfect = ClosedSet::cantor(a, a + positive_length(rng));
      break;
    }
    case 2:
      perfect = options.allow_liouville ? ClosedSet::sliouville() : ClosedSet::cantor(Rational(0), Rational(1));
      break;
    case 3:
      perfect = options.allow_rays ? ClosedSet::ray(RayDirection::kRight, small_rational(rng))
                                   : ClosedSet::interval(Rational(-1), Rational(0));
      break;
    default:
      perfect = ClosedSet::tower(small_rational(rng), Rational(1), Rational(1) / Rational(3),
                                 ClosedSet::cantor(Rational(1), Rational(2)));
      break;
  }
  return ClosedSet::union_of({random_expression(rng, options), perfect});
}

ClosedSet nested_tower(unsigned depth) {
  ClosedSet e = ClosedSet::points({Rational(1)});
  for (unsigned d = 1; d <= depth; ++d) {
    // Previous level has hull [0, h] (or is the point 1); map it onto [1, 2].
    const ClosedSet child = d == 1 ? e : ClosedSet::affine(AffineMap{Rational(1) / *hull(e)->hi, Rational(1)}, e);
    e = ClosedSet::tower(Rational(0), Rational(1), Rational(1) / Rational(2), normalize(child));
  }
  return e;
}

}  // namespace liouville
