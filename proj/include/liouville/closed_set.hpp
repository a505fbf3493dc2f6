#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "liouville/rational.hpp"

namespace liouville {

// t -> slope * t + offset with slope != 0.
struct AffineMap {
  Rational slope{1};
  Rational offset{0};

  static AffineMap make(Rational slope, Rational offset);

  Rational apply(const Rational& t) const { return slope * t + offset; }
  Rational invert(const Rational& x) const { return (x - offset) / slope; }
  // (this o inner)(t) = this(inner(t)).
  AffineMap after(const AffineMap& inner) const;
  bool is_identity() const { return slope == Rational(1) && offset.is_zero(); }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// Thrown when a constructor argument would not denote a valid closed set.
class InvalidSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RayDirection { kLeft, kRight };  // (-inf, e] and [e, +inf)

class ClosedSet;

struct EmptyNode {};
struct PointsNode {
  std::vector<Rational> points;  // sorted, distinct, nonempty
};
struct IntervalNode {
  Rational a;
  Rational b;
};
struct RayNode {
  RayDirection direction;
  Rational endpoint;
};
// {L} u union_{k>=0} (L + scale * ratio^k * child).
struct TowerNode {
  Rational limit;
  Rational scale;
  Rational ratio;
  std::shared_ptr<const ClosedSet> child;
  Rational child_lo;  // hull of child, cached
  Rational child_hi;
};
// Middle-thirds Cantor set on [a, b].
struct CantorNode {
  Rational a;
  Rational b;
};
// The set of factorial-digit Liouville numbers; treated through rules only.
struct SLiouvilleNode {};
struct UnionNode {
  std::vector<ClosedSet> parts;
};
struct AffineNode {
  AffineMap map;
  std::shared_ptr<const ClosedSet> child;
};

using SetNode = std::variant<EmptyNode, PointsNode, IntervalNode, RayNode, TowerNode, CantorNode,
                             SLiouvilleNode, UnionNode, AffineNode>;

// Immutable expression denoting a closed subset of the real line. Cheap to
// copy; subtrees are shared.
class ClosedSet {
 public:
  ClosedSet();  // empty set

  static ClosedSet empty();
  // Sorted and deduplicated; no points gives the empty set.
  static ClosedSet points(std::vector<Rational> pts);
  // Requires a <= b ("interval endpoints out of order"). a == b is kept as is
  // until normalization.
  static ClosedSet interval(Rational a, Rational b);
  static ClosedSet ray(RayDirection direction, Rational endpoint);
  // Requires scale != 0, 0 < |ratio| < 1 and a nonempty bounded child with
  // hull [lo, hi], lo > 0. Clusters may touch (|ratio| * hi == lo) but not
  // overlap ("tower clusters overlap").
  static ClosedSet tower(Rational limit, Rational scale, Rational ratio, ClosedSet child);
  // Requires a < b.
  static ClosedSet cantor(Rational a, Rational b);
  static ClosedSet sliouville();
  static ClosedSet union_of(std::vector<ClosedSet> parts);
  static ClosedSet affine(AffineMap map, ClosedSet child);

  const SetNode& node() const { return *node_; }
  template <class T>
  const T* as() const {
    return std::get_if<T>(node_.get());
  }
  bool is_empty_node() const { return as<EmptyNode>() != nullptr; }

  // Kind order used for sorting union components.
  int kind_index() const { return static_cast<int>(node_->index()); }

  std::string to_sexpr() const;

  friend bool operator==(const ClosedSet& a, const ClosedSet& b);
  // Total structural order.
  friend int structural_compare(const ClosedSet& a, const ClosedSet& b);

 private:
  explicit ClosedSet(SetNode node);
  std::shared_ptr<const SetNode> node_;
};

std::ostream& operator<<(std::ostream& os, const ClosedSet& e);

// Smallest closed interval containing the set. Each side is nullopt when
// unbounded; the whole result is nullopt for the empty set.
struct Hull {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};
std::optional<Hull> hull(const ClosedSet& e);

// Canonical form: affine maps pushed to the leaves, unions flattened, merged
// and sorted, redundant components dropped, degenerate intervals turned into
// points, tower scales reduced to +-1. Idempotent.
ClosedSet normalize(const ClosedSet& e);

ClosedSet affine_image(const AffineMap& map, const ClosedSet& e);

// Exact membership of a rational. The Liouville leaf and its affine images
// contain no rationals.
bool member_of(const Rational& x, const ClosedSet& e);

// Exact infimum of |x - t| over the set; nullopt for the empty set. Throws
// std::domain_error when the Liouville leaf is involved.
std::optional<Rational> distance_to(const Rational& x, const ClosedSet& e);

// Maximal nesting of tower nodes.
unsigned tower_depth(const ClosedSet& e);

}  // namespace liouville
