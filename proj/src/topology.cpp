#include "liouville/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace liouville {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Derived set of a normalized expression, not yet renormalized.
ClosedSet derive_normalized(const ClosedSet& e) {
  return std::visit(
      Overloaded{
          [](const EmptyNode&) { return ClosedSet::empty(); },
          [](const PointsNode&) { return ClosedSet::empty(); },
          [&](const TowerNode& n) {
            // Away from the limit the clusters form a locally finite union,
            // so the derived set is the tower over the child's derived set;
            // the limit stays as long as the child is nonempty.
            const ClosedSet child = normalize(derive_normalized(*n.child));
            if (child.is_empty_node()) return ClosedSet::points({n.limit});
            return ClosedSet::tower(n.limit, n.scale, n.ratio, child);
          },
          [](const UnionNode& n) {
            std::vector<ClosedSet> parts;
            parts.reserve(n.parts.size());
            for (const auto& p : n.parts) parts.push_back(derive_normalized(p));
            return ClosedSet::union_of(std::move(parts));
          },
          // Intervals, rays, Cantor sets and the Liouville leaf are perfect.
          [&](const auto&) { return e; },
      },
      e.node());
}

// Point and tower pieces of a normalized expression, before removing points
// that belong to the kernel.
ClosedSet scattered_pieces(const ClosedSet& e) {
  if (e.as<PointsNode>()) return e;
  if (const auto* t = e.as<TowerNode>()) {
    const ClosedSet child = normalize(scattered_pieces(*t->child));
    if (child.is_empty_node()) return ClosedSet::empty();
    return ClosedSet::tower(t->limit, t->scale, t->ratio, child);
  }
  if (const auto* u = e.as<UnionNode>()) {
    std::vector<ClosedSet> parts;
    for (const auto& p : u->parts) parts.push_back(scattered_pieces(p));
    return ClosedSet::union_of(std::move(parts));
  }
  return ClosedSet::empty();
}

ClosedSet drop_points_in(const ClosedSet& e, const ClosedSet& kernel) {
  if (const auto* p = e.as<PointsNode>()) {
    std::vector<Rational> kept;
    for (const auto& x : p->points) {
      if (!member_of(x, kernel)) kept.push_back(x);
    }
    return ClosedSet::points(std::move(kept));
  }
  if (const auto* u = e.as<UnionNode>()) {
    std::vector<ClosedSet> parts;
    for (const auto& q : u->parts) parts.push_back(drop_points_in(q, kernel));
    return normalize(ClosedSet::union_of(std::move(parts)));
  }
  return e;
}

bool interior_empty_normalized(const ClosedSet& e) {
  return std::visit(Overloaded{
                        [](const IntervalNode& n) { return n.a == n.b; },
                        [](const RayNode&) { return false; },
                        [](const TowerNode& n) { return interior_empty_normalized(*n.child); },
                        [](const UnionNode& n) {
                          return std::all_of(n.parts.begin(), n.parts.end(), interior_empty_normalized);
                        },
                        [](const auto&) { return true; },
                    },
                    e.node());
}

Rational finite_measure(const ClosedSet& e);

Measure measure_normalized(const ClosedSet& e) {
  if (e.as<RayNode>()) return {true, Rational(0)};
  if (const auto* u = e.as<UnionNode>()) {
    // Components carrying measure must not overlap.
    std::vector<std::pair<Hull, Rational>> massive;
    for (const auto& p : u->parts) {
      const Measure m = measure_normalized(p);
      if (m.infinite) return m;
      if (m.value.sign() > 0) massive.emplace_back(*hull(p), m.value);
    }
    std::sort(massive.begin(), massive.end(),
              [](const auto& a, const auto& b) { return *a.first.lo < *b.first.lo; });
    Rational total(0);
    for (std::size_t i = 0; i < massive.size(); ++i) {
      if (i > 0 && *massive[i].first.lo < *massive[i - 1].first.hi) {
        throw std::domain_error("measure of overlapping components is not supported");
      }
      total += massive[i].second;
    }
    return {false, total};
  }
  return {false, finite_measure(e)};
}

Rational finite_measure(const ClosedSet& e) {
  if (const auto* i = e.as<IntervalNode>()) return i->b - i->a;
  if (const auto* t = e.as<TowerNode>()) {
    const Rational child = measure_normalized(*t->child).value;
    return t->scale.abs() * child / (Rational(1) - t->ratio.abs());
  }
  return Rational(0);
}

// A nondegenerate interval [a, b] inside a normalized set, leftmost first.
std::optional<std::pair<Rational, Rational>> interval_inside(const ClosedSet& e) {
  if (const auto* i = e.as<IntervalNode>()) {
    if (i->a < i->b) return std::pair{i->a, i->b};
    return std::nullopt;
  }
  if (const auto* r = e.as<RayNode>()) {
    if (r->direction == RayDirection::kRight) return std::pair{r->endpoint, r->endpoint + Rational(1)};
    return std::pair{r->endpoint - Rational(1), r->endpoint};
  }
  if (const auto* t = e.as<TowerNode>()) {
    auto inner = interval_inside(*t->child);
    if (!inner) return std::nullopt;
    Rational a = t->limit + t->scale * inner->first;
    Rational b = t->limit + t->scale * inner->second;
    if (b < a) std::swap(a, b);
    return std::pair{a, b};
  }
  if (const auto* u = e.as<UnionNode>()) {
    for (const auto& p : u->parts) {
      if (auto found = interval_inside(p)) return found;
    }
  }
  return std::nullopt;
}

}  // namespace

ClosedSet derived_set(const ClosedSet& e) { return normalize(derive_normalized(normalize(e))); }

Derivative cb_derivative(const ClosedSet& e, unsigned k) {
  if (k > kMaxDerivativeOrder) throw CapExceeded("derivative order above 64");
  Derivative out{normalize(e), std::nullopt};
  for (unsigned j = 0; j < k; ++j) {
    ClosedSet next = derived_set(out.set);
    if (next == out.set) {
      out.stabilized_at = j;
      break;
    }
    out.set = std::move(next);
  }
  return out;
}

CBRank cb_rank(const ClosedSet& e) {
  ClosedSet current = normalize(e);
  for (unsigned r = 0; r <= kMaxDerivativeOrder; ++r) {
    ClosedSet next = derived_set(current);
    if (next == current) return {r, std::move(current)};
    current = std::move(next);
  }
  throw std::logic_error("derived sets did not stabilize");
}

BendixsonDecomposition bendixson_decompose(const ClosedSet& e) {
  const ClosedSet n = normalize(e);
  ClosedSet kernel = cb_rank(n).fixpoint;
  ClosedSet scattered = drop_points_in(normalize(scattered_pieces(n)), kernel);
  return {std::move(kernel), std::move(scattered)};
}

ClosedSet condensation_set(const ClosedSet& e) { return cb_rank(e).fixpoint; }

bool interior_is_empty(const ClosedSet& e) { return interior_empty_normalized(normalize(e)); }

Perfectness perfectness(const ClosedSet& e) {
  const ClosedSet n = normalize(e);
  if (n.is_empty_node()) return Perfectness::kEmptySet;
  return derived_set(n) == n ? Perfectness::kPerfect : Perfectness::kNotPerfect;
}

bool is_perfect(const ClosedSet& e) { return perfectness(e) == Perfectness::kPerfect; }

bool is_cantor(const ClosedSet& e) { return is_perfect(e) && interior_is_empty(e); }

Measure lebesgue_measure(const ClosedSet& e) { return measure_normalized(normalize(e)); }

bool is_uncountable(const ClosedSet& e) { return !cb_rank(e).fixpoint.is_empty_node(); }

std::optional<ClosedSet> find_cantor_subset(const ClosedSet& e) {
  ClosedSet kernel = cb_rank(e).fixpoint;
  if (kernel.is_empty_node()) return std::nullopt;
  if (interior_empty_normalized(kernel)) return kernel;
  const auto span = interval_inside(kernel);
  if (!span) throw std::logic_error("kernel with interior has no interval component");
  const Rational mid = (span->first + span->second) / Rational(2);
  const Rational third_of_radius = (span->second - span->first) / Rational(6);
  return ClosedSet::cantor(mid - third_of_radius, mid + third_of_radius);
}

std::vector<Rational> sample_members(const ClosedSet& e, unsigned clusters) {
  std::vector<Rational> out;
  std::visit(Overloaded{
                 [](const EmptyNode&) {},
                 [&](const PointsNode& n) { out = n.points; },
                 [&](const IntervalNode& n) {
                   out = {n.a, n.b, (n.a + n.b) / Rational(2)};
                 },
                 [&](const RayNode& n) {
                   const Rational step = n.direction == RayDirection::kLeft ? Rational(-1) : Rational(1);
                   out = {n.endpoint, n.endpoint + step, n.endpoint + step / Rational(3)};
                 },
                 [&](const TowerNode& n) {
                   out.push_back(n.limit);
                   const auto child = sample_members(*n.child, clusters);
                   Rational factor = n.scale;
                   for (unsigned k = 0; k < clusters; ++k) {
                     for (const auto& t : child) out.push_back(n.limit + factor * t);
                     factor *= n.ratio;
                   }
                 },
                 [&](const CantorNode& n) {
                   const Rational w = n.b - n.a;
                   out = {n.a, n.b, n.a + w / Rational(4), n.a + w * Rational(3) / Rational(4),
                          n.a + w / Rational(3), n.a + w * Rational(2) / Rational(9)};
                 },
                 [](const SLiouvilleNode&) {},
                 [&](const UnionNode& n) {
                   for (const auto& p : n.parts) {
                     const auto part = sample_members(p, clusters);
                     out.insert(out.end(), part.begin(), part.end());
                   }
                 },
                 [&](const AffineNode& n) {
                   for (const auto& t : sample_members(*n.child, clusters)) out.push_back(n.map.apply(t));
                 },
             },
             e.node());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace liouville
