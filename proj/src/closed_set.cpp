#include "liouville/closed_set.hpp"

#include <algorithm>
#include <ostream>

namespace liouville {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int cmp(const Rational& a, const Rational& b) {
  const auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// nullopt sorts first (stands for -inf).
int cmp_lower(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return a ? 1 : (b ? -1 : 0);
  return cmp(*a, *b);
}

Rational sign_of(const Rational& r) { return Rational(r.sign()); }

const Rational kThird = Rational(1) / Rational(3);
const Rational kTwoThirds = Rational(2) / Rational(3);

}  // namespace

AffineMap AffineMap::make(Rational slope, Rational offset) {
  if (slope.is_zero()) throw InvalidSet("affine slope must be nonzero");
  return AffineMap{std::move(slope), std::move(offset)};
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  return AffineMap{slope * inner.slope, slope * inner.offset + offset};
}

ClosedSet::ClosedSet() : node_(std::make_shared<const SetNode>(EmptyNode{})) {}
ClosedSet::ClosedSet(SetNode node) : node_(std::make_shared<const SetNode>(std::move(node))) {}

ClosedSet ClosedSet::empty() { return ClosedSet(); }

ClosedSet ClosedSet::points(std::vector<Rational> pts) {
  if (pts.empty()) return empty();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return ClosedSet(PointsNode{std::move(pts)});
}

ClosedSet ClosedSet::interval(Rational a, Rational b) {
  if (a > b) throw InvalidSet("interval endpoints out of order");
  return ClosedSet(IntervalNode{std::move(a), std::move(b)});
}

ClosedSet ClosedSet::ray(RayDirection direction, Rational endpoint) {
  return ClosedSet(RayNode{direction, std::move(endpoint)});
}

ClosedSet ClosedSet::tower(Rational limit, Rational scale, Rational ratio, ClosedSet child) {
  if (scale.is_zero()) throw InvalidSet("tower scale must be nonzero");
  if (ratio.is_zero() || ratio.abs() >= Rational(1)) {
    throw InvalidSet("tower ratio must satisfy 0 < |ratio| < 1");
  }
  const auto h = hull(child);
  if (!h) throw InvalidSet("tower child must be nonempty");
  if (!h->lo || !h->hi) throw InvalidSet("tower child must be bounded");
  if (h->lo->sign() <= 0) throw InvalidSet("tower child must lie to the right of 0");
  if (ratio.abs() * *h->hi > *h->lo) throw InvalidSet("tower clusters overlap");
  TowerNode node{std::move(limit), std::move(scale), std::move(ratio),
                 std::make_shared<const ClosedSet>(std::move(child)), *h->lo, *h->hi};
  return ClosedSet(std::move(node));
}

ClosedSet ClosedSet::cantor(Rational a, Rational b) {
  if (a >= b) throw InvalidSet("cantor endpoints out of order");
  return ClosedSet(CantorNode{std::move(a), std::move(b)});
}

ClosedSet ClosedSet::sliouville() { return ClosedSet(SLiouvilleNode{}); }

ClosedSet ClosedSet::union_of(std::vector<ClosedSet> parts) { return ClosedSet(UnionNode{std::move(parts)}); }

ClosedSet ClosedSet::affine(AffineMap map, ClosedSet child) {
  if (map.slope.is_zero()) throw InvalidSet("affine slope must be nonzero");
  return ClosedSet(AffineNode{std::move(map), std::make_shared<const ClosedSet>(std::move(child))});
}

int structural_compare(const ClosedSet& a, const ClosedSet& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind_index() != b.kind_index()) return a.kind_index() < b.kind_index() ? -1 : 1;
  return std::visit(
      Overloaded{
          [](const EmptyNode&, const EmptyNode&) { return 0; },
          [](const PointsNode& x, const PointsNode& y) {
            const std::size_t n = std::min(x.points.size(), y.points.size());
            for (std::size_t i = 0; i < n; ++i) {
              if (int c = cmp(x.points[i], y.points[i])) return c;
            }
            return x.points.size() == y.points.size() ? 0 : (x.points.size() < y.points.size() ? -1 : 1);
          },
          [](const IntervalNode& x, const IntervalNode& y) {
            if (int c = cmp(x.a, y.a)) return c;
            return cmp(x.b, y.b);
          },
          [](const RayNode& x, const RayNode& y) {
            if (x.direction != y.direction) return x.direction == RayDirection::kLeft ? -1 : 1;
            return cmp(x.endpoint, y.endpoint);
          },
          [](const TowerNode& x, const TowerNode& y) {
            if (int c = cmp(x.limit, y.limit)) return c;
            if (int c = cmp(x.scale, y.scale)) return c;
            if (int c = cmp(x.ratio, y.ratio)) return c;
            return structural_compare(*x.child, *y.child);
          },
          [](const CantorNode& x, const CantorNode& y) {
            if (int c = cmp(x.a, y.a)) return c;
            return cmp(x.b, y.b);
          },
          [](const SLiouvilleNode&, const SLiouvilleNode&) { return 0; },
          [](const UnionNode& x, const UnionNode& y) {
            const std::size_t n = std::min(x.parts.size(), y.parts.size());
            for (std::size_t i = 0; i < n; ++i) {
              if (int c = structural_compare(x.parts[i], y.parts[i])) return c;
            }
            return x.parts.size() == y.parts.size() ? 0 : (x.parts.size() < y.parts.size() ? -1 : 1);
          },
          [](const AffineNode& x, const AffineNode& y) {
            if (int c = cmp(x.map.slope, y.map.slope)) return c;
            if (int c = cmp(x.map.offset, y.map.offset)) return c;
            return structural_compare(*x.child, *y.child);
          },
          [](const auto&, const auto&) { return 0; },  // unreachable: kinds differ
      },
      a.node(), b.node());
}

bool operator==(const ClosedSet& a, const ClosedSet& b) { return structural_compare(a, b) == 0; }

std::string ClosedSet::to_sexpr() const {
  return std::visit(
      Overloaded{
          [](const EmptyNode&) -> std::string { return "(empty)"; },
          [](const PointsNode& n) {
            std::string out = "(points";
            for (const auto& p : n.points) out += " " + p.to_string();
            return out + ")";
          },
          [](const IntervalNode& n) { return "(interval " + n.a.to_string() + " " + n.b.to_string() + ")"; },
          [](const RayNode& n) {
            return std::string("(ray ") + (n.direction == RayDirection::kLeft ? "left " : "right ") +
                   n.endpoint.to_string() + ")";
          },
          [](const TowerNode& n) {
            return "(tower " + n.limit.to_string() + " " + n.scale.to_string() + " " + n.ratio.to_string() + " " +
                   n.child->to_sexpr() + ")";
          },
          [](const CantorNode& n) { return "(cantor " + n.a.to_string() + " " + n.b.to_string() + ")"; },
          [](const SLiouvilleNode&) -> std::string { return "(sliouville)"; },
          [](const UnionNode& n) {
            std::string out = "(union";
            for (const auto& p : n.parts) out += " " + p.to_sexpr();
            return out + ")";
          },
          [](const AffineNode& n) {
            return "(affine " + n.map.slope.to_string() + " " + n.map.offset.to_string() + " " +
                   n.child->to_sexpr() + ")";
          },
      },
      node());
}

std::ostream& operator<<(std::ostream& os, const ClosedSet& e) { return os << e.to_sexpr(); }

namespace {

Hull span(const Rational& a, const Rational& b) { return a <= b ? Hull{a, b} : Hull{b, a}; }

void extend(Hull& h, const Hull& other) {
  if (!h.lo || !other.lo) {
    h.lo.reset();
  } else if (*other.lo < *h.lo) {
    h.lo = other.lo;
  }
  if (!h.hi || !other.hi) {
    h.hi.reset();
  } else if (*other.hi > *h.hi) {
    h.hi = other.hi;
  }
}

}  // namespace

std::optional<Hull> hull(const ClosedSet& e) {
  return std::visit(
      Overloaded{
          [](const EmptyNode&) -> std::optional<Hull> { return std::nullopt; },
          [](const PointsNode& n) -> std::optional<Hull> { return Hull{n.points.front(), n.points.back()}; },
          [](const IntervalNode& n) -> std::optional<Hull> { return Hull{n.a, n.b}; },
          [](const RayNode& n) -> std::optional<Hull> {
            if (n.direction == RayDirection::kLeft) return Hull{std::nullopt, n.endpoint};
            return Hull{n.endpoint, std::nullopt};
          },
          [](const TowerNode& n) -> std::optional<Hull> {
            // Clusters 0 and 1 are the outermost on each side of the limit.
            Hull h{n.limit, n.limit};
            Rational factor = n.scale;
            for (int k = 0; k < 2; ++k) {
              extend(h, span(n.limit + factor * n.child_lo, n.limit + factor * n.child_hi));
              factor *= n.ratio;
            }
            return h;
          },
          [](const CantorNode& n) -> std::optional<Hull> { return Hull{n.a, n.b}; },
          // A rational bound; the true extremes are irrational.
          [](const SLiouvilleNode&) -> std::optional<Hull> {
            return Hull{Rational(1) / Rational(100), Rational(1) / Rational(9)};
          },
          [](const UnionNode& n) -> std::optional<Hull> {
            std::optional<Hull> out;
            for (const auto& p : n.parts) {
              auto h = hull(p);
              if (!h) continue;
              if (!out) {
                out = h;
              } else {
                extend(*out, *h);
              }
            }
            return out;
          },
          [](const AffineNode& n) -> std::optional<Hull> {
            auto h = hull(*n.child);
            if (!h) return std::nullopt;
            std::optional<Rational> lo = h->lo ? std::optional<Rational>(n.map.apply(*h->lo)) : std::nullopt;
            std::optional<Rational> hi = h->hi ? std::optional<Rational>(n.map.apply(*h->hi)) : std::nullopt;
            if (n.map.slope.sign() < 0) std::swap(lo, hi);
            return Hull{lo, hi};
          },
      },
      e.node());
}

namespace {

ClosedSet make_union(std::vector<ClosedSet> parts);

// Tower with scale reduced to sign(scale); |scale| moves into the child.
ClosedSet canonical_tower(const Rational& limit, const Rational& scale, const Rational& ratio,
                          const ClosedSet& child) {
  if (child.is_empty_node()) return ClosedSet::points({limit});
  const Rational magnitude = scale.abs();
  if (magnitude == Rational(1)) return ClosedSet::tower(limit, scale, ratio, child);
  return ClosedSet::tower(limit, sign_of(scale), ratio,
                          normalize(ClosedSet::affine(AffineMap{magnitude, Rational(0)}, child)));
}

// Image of a normalized expression.
ClosedSet map_normalized(const AffineMap& m, const ClosedSet& e) {
  if (m.is_identity()) return e;
  return std::visit(
      Overloaded{
          [&](const EmptyNode&) { return e; },
          [&](const PointsNode& n) {
            std::vector<Rational> pts;
            pts.reserve(n.points.size());
            for (const auto& p : n.points) pts.push_back(m.apply(p));
            return ClosedSet::points(std::move(pts));
          },
          [&](const IntervalNode& n) {
            const Hull h = span(m.apply(n.a), m.apply(n.b));
            return ClosedSet::interval(*h.lo, *h.hi);
          },
          [&](const RayNode& n) {
            RayDirection d = n.direction;
            if (m.slope.sign() < 0) d = d == RayDirection::kLeft ? RayDirection::kRight : RayDirection::kLeft;
            return ClosedSet::ray(d, m.apply(n.endpoint));
          },
          [&](const TowerNode& n) { return canonical_tower(m.apply(n.limit), m.slope * n.scale, n.ratio, *n.child); },
          [&](const CantorNode& n) {
            const Hull h = span(m.apply(n.a), m.apply(n.b));
            return ClosedSet::cantor(*h.lo, *h.hi);
          },
          [&](const SLiouvilleNode&) { return ClosedSet::affine(m, e); },
          [&](const UnionNode& n) {
            std::vector<ClosedSet> parts;
            parts.reserve(n.parts.size());
            for (const auto& p : n.parts) parts.push_back(map_normalized(m, p));
            return make_union(std::move(parts));
          },
          [&](const AffineNode& n) {
            const AffineMap composed = m.after(n.map);
            if (composed.is_identity()) return *n.child;
            return ClosedSet::affine(composed, *n.child);
          },
      },
      e.node());
}

// Interval-like component; nullopt endpoints are infinite.
struct Continuum {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

bool within(const Rational& x, const Continuum& c) { return (!c.lo || *c.lo <= x) && (!c.hi || x <= *c.hi); }

bool hull_within(const Hull& h, const Continuum& c) {
  if (c.lo && (!h.lo || *h.lo < *c.lo)) return false;
  if (c.hi && (!h.hi || *h.hi > *c.hi)) return false;
  return true;
}

void flatten_into(const ClosedSet& e, std::vector<ClosedSet>& out) {
  if (const auto* u = e.as<UnionNode>()) {
    for (const auto& p : u->parts) flatten_into(p, out);
  } else if (!e.is_empty_node()) {
    out.push_back(e);
  }
}

// Union of already normalized parts.
ClosedSet make_union(std::vector<ClosedSet> parts) {
  std::vector<ClosedSet> flat;
  for (const auto& p : parts) flatten_into(p, flat);

  std::vector<Rational> pts;
  std::vector<Continuum> continua;
  std::vector<ClosedSet> others;
  for (const auto& p : flat) {
    if (const auto* n = p.as<PointsNode>()) {
      pts.insert(pts.end(), n->points.begin(), n->points.end());
    } else if (const auto* n = p.as<IntervalNode>()) {
      continua.push_back({n->a, n->b});
    } else if (const auto* n = p.as<RayNode>()) {
      if (n->direction == RayDirection::kLeft) {
        continua.push_back({std::nullopt, n->endpoint});
      } else {
        continua.push_back({n->endpoint, std::nullopt});
      }
    } else {
      others.push_back(p);
    }
  }

  std::sort(continua.begin(), continua.end(),
            [](const Continuum& a, const Continuum& b) { return cmp_lower(a.lo, b.lo) < 0; });
  std::vector<Continuum> merged;
  for (const auto& c : continua) {
    if (!merged.empty()) {
      Continuum& last = merged.back();
      if (!last.hi) continue;
      if (c.lo && *c.lo > *last.hi) {
        merged.push_back(c);
        continue;
      }
      if (!c.hi || *c.hi > *last.hi) last.hi = c.hi;
      continue;
    }
    merged.push_back(c);
  }

  std::sort(others.begin(), others.end(),
            [](const ClosedSet& a, const ClosedSet& b) { return structural_compare(a, b) < 0; });
  others.erase(std::unique(others.begin(), others.end()), others.end());
  std::erase_if(others, [&](const ClosedSet& o) {
    const auto h = hull(o);
    return std::any_of(merged.begin(), merged.end(), [&](const Continuum& c) { return hull_within(*h, c); });
  });

  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::erase_if(pts, [&](const Rational& x) {
    return std::any_of(merged.begin(), merged.end(), [&](const Continuum& c) { return within(x, c); }) ||
           std::any_of(others.begin(), others.end(), [&](const ClosedSet& o) { return member_of(x, o); });
  });

  std::vector<ClosedSet> components = std::move(others);
  if (!pts.empty()) components.push_back(ClosedSet::points(std::move(pts)));
  for (const auto& c : merged) {
    if (c.lo && c.hi) {
      components.push_back(ClosedSet::interval(*c.lo, *c.hi));
    } else if (c.hi) {
      components.push_back(ClosedSet::ray(RayDirection::kLeft, *c.hi));
    } else if (c.lo) {
      components.push_back(ClosedSet::ray(RayDirection::kRight, *c.lo));
    } else {
      components.push_back(ClosedSet::ray(RayDirection::kLeft, Rational(0)));
      components.push_back(ClosedSet::ray(RayDirection::kRight, Rational(0)));
    }
  }

  if (components.empty()) return ClosedSet::empty();
  if (components.size() == 1) return components.front();
  std::sort(components.begin(), components.end(), [](const ClosedSet& a, const ClosedSet& b) {
    if (int c = cmp_lower(hull(a)->lo, hull(b)->lo)) return c < 0;
    if (a.kind_index() != b.kind_index()) return a.kind_index() < b.kind_index();
    return structural_compare(a, b) < 0;
  });
  return ClosedSet::union_of(std::move(components));
}

}  // namespace

ClosedSet normalize(const ClosedSet& e) {
  return std::visit(
      Overloaded{
          [&](const IntervalNode& n) { return n.a == n.b ? ClosedSet::points({n.a}) : e; },
          [&](const TowerNode& n) { return canonical_tower(n.limit, n.scale, n.ratio, normalize(*n.child)); },
          [&](const UnionNode& n) {
            std::vector<ClosedSet> parts;
            parts.reserve(n.parts.size());
            for (const auto& p : n.parts) parts.push_back(normalize(p));
            return make_union(std::move(parts));
          },
          [&](const AffineNode& n) { return map_normalized(n.map, normalize(*n.child)); },
          [&](const auto&) { return e; },
      },
      e.node());
}

ClosedSet affine_image(const AffineMap& map, const ClosedSet& e) {
  return normalize(ClosedSet::affine(AffineMap::make(map.slope, map.offset), e));
}

namespace {

// One step of the middle-thirds map, or nullopt inside the removed gap.
std::optional<Rational> triadic_step(const Rational& t) {
  if (t <= kThird) return t * Rational(3);
  if (t >= kTwoThirds) return t * Rational(3) - Rational(2);
  return std::nullopt;
}

// Membership of t in the standard Cantor set; Brent cycle detection on the
// (eventually periodic) orbit of the middle-thirds map.
bool in_standard_cantor(const Rational& t) {
  if (t.sign() < 0 || t > Rational(1)) return false;
  Rational tortoise = t;
  auto hare = triadic_step(t);
  if (!hare) return false;
  std::uint64_t power = 1;
  std::uint64_t lambda = 1;
  while (*hare != tortoise) {
    if (power == lambda) {
      tortoise = *hare;
      power *= 2;
      lambda = 0;
    }
    hare = triadic_step(*hare);
    if (!hare) return false;
    ++lambda;
  }
  return true;
}

// Distance from t to the standard Cantor set.
Rational standard_cantor_distance(Rational t) {
  if (t.sign() <= 0) return -t;
  if (t >= Rational(1)) return t - Rational(1);
  if (in_standard_cantor(t)) return Rational(0);
  Rational scale(1);
  const Rational three(3);
  for (;;) {
    if (t > kThird && t < kTwoThirds) return scale * min(t - kThird, kTwoThirds - t);
    t = t <= kThird ? t * three : t * three - Rational(2);
    scale /= three;
  }
}

}  // namespace

bool member_of(const Rational& x, const ClosedSet& e) {
  return std::visit(
      Overloaded{
          [](const EmptyNode&) { return false; },
          [&](const PointsNode& n) { return std::binary_search(n.points.begin(), n.points.end(), x); },
          [&](const IntervalNode& n) { return n.a <= x && x <= n.b; },
          [&](const RayNode& n) { return n.direction == RayDirection::kLeft ? x <= n.endpoint : x >= n.endpoint; },
          [&](const TowerNode& n) {
            if (x == n.limit) return true;
            // Cluster k in child coordinates: u = ratio^k * w with w in child.
            const Rational u = (x - n.limit) / n.scale;
            Rational factor(1);
            for (;;) {
              const Rational w = u / factor;
              if (w.abs() > n.child_hi) return false;
              if (w.sign() > 0 && w >= n.child_lo && member_of(w, *n.child)) return true;
              if (w.sign() < 0 && n.ratio.sign() > 0) return false;
              factor *= n.ratio;
            }
          },
          [&](const CantorNode& n) { return in_standard_cantor((x - n.a) / (n.b - n.a)); },
          [](const SLiouvilleNode&) { return false; },
          [&](const UnionNode& n) {
            return std::any_of(n.parts.begin(), n.parts.end(), [&](const ClosedSet& p) { return member_of(x, p); });
          },
          [&](const AffineNode& n) { return member_of(n.map.invert(x), *n.child); },
      },
      e.node());
}

std::optional<Rational> distance_to(const Rational& x, const ClosedSet& e) {
  return std::visit(
      Overloaded{
          [](const EmptyNode&) -> std::optional<Rational> { return std::nullopt; },
          [&](const PointsNode& n) -> std::optional<Rational> {
            auto it = std::lower_bound(n.points.begin(), n.points.end(), x);
            std::optional<Rational> best;
            if (it != n.points.end()) best = *it - x;
            if (it != n.points.begin()) {
              const Rational d = x - *std::prev(it);
              if (!best || d < *best) best = d;
            }
            return best;
          },
          [&](const IntervalNode& n) -> std::optional<Rational> {
            if (x < n.a) return n.a - x;
            if (x > n.b) return x - n.b;
            return Rational(0);
          },
          [&](const RayNode& n) -> std::optional<Rational> {
            const Rational d = n.direction == RayDirection::kLeft ? x - n.endpoint : n.endpoint - x;
            return d.sign() > 0 ? d : Rational(0);
          },
          [&](const TowerNode& n) -> std::optional<Rational> {
            // Work with u = (x - L)/scale, where cluster k is ratio^k * child.
            const Rational u = (x - n.limit) / n.scale;
            Rational best = u.abs();
            if (best.is_zero()) return best;
            if (u.sign() > 0 || n.ratio.sign() < 0) {
              Rational factor(1);
              for (;;) {
                const Rational w = u / factor;
                if (w.sign() > 0) {
                  const Rational d = factor.abs() * *distance_to(w, *n.child);
                  if (d < best) best = d;
                  // This cluster lies between the limit and x; later ones on
                  // this side are farther.
                  if (w > n.child_hi) break;
                }
                factor *= n.ratio;
              }
            }
            return n.scale.abs() * best;
          },
          [&](const CantorNode& n) -> std::optional<Rational> {
            const Rational width = n.b - n.a;
            return width * standard_cantor_distance((x - n.a) / width);
          },
          [](const SLiouvilleNode&) -> std::optional<Rational> {
            throw std::domain_error("distance to the Liouville leaf is not rational");
          },
          [&](const UnionNode& n) -> std::optional<Rational> {
            std::optional<Rational> best;
            for (const auto& p : n.parts) {
              auto d = distance_to(x, p);
              if (d && (!best || *d < *best)) best = d;
            }
            return best;
          },
          [&](const AffineNode& n) -> std::optional<Rational> {
            auto d = distance_to(n.map.invert(x), *n.child);
            if (!d) return d;
            return n.map.slope.abs() * *d;
          },
      },
      e.node());
}

unsigned tower_depth(const ClosedSet& e) {
  if (const auto* t = e.as<TowerNode>()) return 1 + tower_depth(*t->child);
  if (const auto* a = e.as<AffineNode>()) return tower_depth(*a->child);
  if (const auto* u = e.as<UnionNode>()) {
    unsigned depth = 0;
    for (const auto& p : u->parts) depth = std::max(depth, tower_depth(p));
    return depth;
  }
  return 0;
}

}  // namespace liouville
