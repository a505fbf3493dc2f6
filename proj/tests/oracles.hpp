#pragma once

// Reference implementations used only by tests. They share no algorithmic
// code with the library: digits come from direct summation and schoolbook
// long division, layers from exhaustive search, set questions from a naive
// walk over the expression tree.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liouville/closed_set.hpp"
#include "liouville/factorial_digits.hpp"

namespace oracle {

using liouville::ClosedSet;
using liouville::Rational;

inline std::uint64_t fact(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline mpz_class ten_to(std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// y-stream read straight from the "prefix|period" text.
struct Seed {
  std::string prefix;
  std::string period;

  explicit Seed(const std::string& text) {
    const auto bar = text.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("seed without '|'");
    prefix = text.substr(0, bar);
    period = text.substr(bar + 1);
    if (period.empty()) throw std::invalid_argument("empty period");
  }
  explicit Seed(const liouville::FactorialDigitNumber& x) : Seed(x.generator().generator().to_string()) {}

  int y(std::size_t n) const {
    const char c = n < prefix.size() ? prefix[n] : period[(n - prefix.size()) % period.size()];
    return c - '0';
  }
  // Block n is (0,1) when y_n = 1, else (1,0).
  int x(std::size_t i) const { return i % 2 == 0 ? 1 - y(i / 2) : y(i / 2); }
};

// sum_{i=1}^{n} x_{i-1} / 10^{i!}
inline mpq_class partial_sum(const Seed& s, unsigned n) {
  mpq_class sum = 0;
  for (unsigned i = 1; i <= n; ++i) {
    if (s.x(i - 1)) sum += mpq_class(1, 1) / mpq_class(ten_to(fact(i)));
  }
  sum.canonicalize();
  return sum;
}

// (10/9) * 10^{-(n+1)!}
inline mpq_class tail(unsigned n) {
  mpq_class t(mpz_class(10), mpz_class(9) * ten_to(fact(n + 1)));
  t.canonicalize();
  return t;
}

inline mpq_class fraction(const mpz_class& p, const mpz_class& q) {
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

// First 1-based index i > n with x_{i-1} = 1.
inline unsigned next_one(const Seed& s, unsigned n) {
  unsigned i = n + 1;
  while (!s.x(i - 1)) ++i;
  return i;
}

inline mpq_class to_mpq(const Rational& r) {
  mpq_class q(r.numerator(), r.denominator());
  q.canonicalize();
  return q;
}

// Member digit at 1-based position k.
inline int member_digit(const Seed& s, std::uint64_t k) {
  for (unsigned i = 1; i <= 20; ++i) {
    const std::uint64_t f = fact(i);
    if (f == k) return s.x(i - 1);
    if (f > k) return 0;
  }
  return 0;
}

// First `len` digits of p/q (0 <= p < q) by schoolbook division.
inline std::string long_division(std::uint64_t p, std::uint64_t q, std::uint64_t len) {
  std::string out;
  out.reserve(len);
  std::uint64_t r = p;
  for (std::uint64_t i = 0; i < len; ++i) {
    r *= 10;
    out.push_back(static_cast<char>('0' + r / q));
    r %= q;
  }
  return out;
}

// Exhaustive U_n search over q <= q_max and p within 1 of xq. Returns the
// least working q.
inline std::optional<std::uint64_t> brute_U(long a, long b, unsigned n, std::uint64_t q_max = 10'000) {
  using i128 = __int128;
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    const i128 aq = static_cast<i128>(a) * static_cast<i128>(q);
    i128 fl = aq / b;
    if (aq % b != 0 && aq < 0) --fl;
    for (i128 p = fl - 1; p <= fl + 2; ++p) {
      i128 r = aq - static_cast<i128>(b) * p;
      if (r < 0) r = -r;
      if (r == 0) continue;
      // |a/b - p/q| < q^{-n}  <=>  r * q^n < b * q
      i128 lhs = r;
      bool overflow = false;
      for (unsigned k = 0; k < n; ++k) {
        lhs *= static_cast<i128>(q);
        if (lhs > static_cast<i128>(1) << 100) {
          overflow = true;
          break;
        }
      }
      if (!overflow && lhs < static_cast<i128>(b) * static_cast<i128>(q)) return q;
    }
  }
  return std::nullopt;
}

// Survives `levels` rounds of keeping the closed outer thirds of [0, 1].
inline bool cantor_subdivision(const mpq_class& x, unsigned levels = 20) {
  std::vector<std::pair<mpq_class, mpq_class>> live;
  if (x >= 0 && x <= 1) live.push_back({mpq_class(0), mpq_class(1)});
  for (unsigned l = 0; l < levels && !live.empty(); ++l) {
    std::vector<std::pair<mpq_class, mpq_class>> next;
    for (const auto& [lo, hi] : live) {
      const mpq_class third = (hi - lo) / 3;
      const mpq_class a = lo + third;
      const mpq_class b = hi - third;
      if (x >= lo && x <= a) next.push_back({lo, a});
      if (x >= b && x <= hi) next.push_back({b, hi});
    }
    live = std::move(next);
  }
  return !live.empty();
}

// Exact membership in the middle-thirds set on [0, 1]: follow the ternary
// shift and remember every state.
inline bool cantor_orbit(Rational t) {
  if (t < Rational(0) || t > Rational(1)) return false;
  const Rational third = Rational(1) / Rational(3);
  const Rational two_thirds = Rational(2) / Rational(3);
  std::set<Rational> seen;
  for (;;) {
    if (!seen.insert(t).second) return true;
    if (t <= third) {
      t = t * Rational(3);
    } else if (t >= two_thirds) {
      t = t * Rational(3) - Rational(2);
    } else {
      return false;
    }
  }
}

inline bool contains_liouville(const ClosedSet& e) { return e.to_sexpr().find("sliouville") != std::string::npos; }

struct Bounds {
  std::optional<Rational> lo;  // nullopt: unbounded
  std::optional<Rational> hi;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Hull of a Liouville-free expression; nullopt for the empty set.
inline std::optional<Bounds> bounds(const ClosedSet& e) {
  using namespace liouville;
  if (e.as<EmptyNode>()) return std::nullopt;
  if (const auto* p = e.as<PointsNode>()) {
    Rational lo = p->points.front(), hi = p->points.front();
    for (const auto& v : p->points) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    return Bounds{lo, hi};
  }
  if (const auto* i = e.as<IntervalNode>()) return Bounds{i->a, i->b};
  if (const auto* c = e.as<CantorNode>()) return Bounds{c->a, c->b};
  if (const auto* r = e.as<RayNode>()) {
    if (r->direction == RayDirection::kLeft) return Bounds{std::nullopt, r->endpoint};
    return Bounds{r->endpoint, std::nullopt};
  }
  if (e.as<SLiouvilleNode>()) throw std::logic_error("oracle does not model the Liouville leaf");
  if (const auto* t = e.as<TowerNode>()) {
    const Bounds cb = *bounds(*t->child);
    Rational lo = t->limit, hi = t->limit;
    for (const Rational& f : {t->scale, t->scale * t->ratio}) {
      for (const Rational& v : {*cb.lo, *cb.hi}) {
        const Rational w = t->limit + f * v;
        if (w < lo) lo = w;
        if (w > hi) hi = w;
      }
    }
    return Bounds{lo, hi};
  }
  if (const auto* u = e.as<UnionNode>()) {
    std::optional<Bounds> acc;
    for (const auto& part : u->parts) {
      const auto b = bounds(part);
      if (!b) continue;
      if (!acc) {
        acc = b;
        continue;
      }
      acc->lo = (acc->lo && b->lo) ? std::optional<Rational>(*b->lo < *acc->lo ? *b->lo : *acc->lo) : std::nullopt;
      acc->hi = (acc->hi && b->hi) ? std::optional<Rational>(*b->hi > *acc->hi ? *b->hi : *acc->hi) : std::nullopt;
    }
    return acc;
  }
  const auto* a = e.as<AffineNode>();
  const auto b = bounds(*a->child);
  if (!b) return std::nullopt;
  std::optional<Rational> lo, hi;
  if (b->lo) lo = a->map.apply(*b->lo);
  if (b->hi) hi = a->map.apply(*b->hi);
  if (a->map.slope.sign() < 0) std::swap(lo, hi);
  return Bounds{lo, hi};
}

// Exact membership of a rational in a Liouville-free expression.
inline bool member(const Rational& s, const ClosedSet& e) {
  using namespace liouville;
  if (e.as<EmptyNode>()) return false;
  if (const auto* p = e.as<PointsNode>()) {
    for (const auto& v : p->points) {
      if (v == s) return true;
    }
    return false;
  }
  if (const auto* i = e.as<IntervalNode>()) return i->a <= s && s <= i->b;
  if (const auto* r = e.as<RayNode>()) return r->direction == RayDirection::kLeft ? s <= r->endpoint : s >= r->endpoint;
  if (const auto* c = e.as<CantorNode>()) return cantor_orbit((s - c->a) / (c->b - c->a));
  if (e.as<SLiouvilleNode>()) return false;  // no rational members
  if (const auto* t = e.as<TowerNode>()) {
    if (s == t->limit) return true;
    const Bounds cb = *bounds(*t->child);
    const Rational gap = abs(s - t->limit);
    Rational f = t->scale;
    // Cluster k spans |f| * [lo, hi] away from the limit.
    while (abs(f) * *cb.hi >= gap) {
      if (abs(f) * *cb.lo <= gap && member((s - t->limit) / f, *t->child)) return true;
      f = f * t->ratio;
    }
    return false;
  }
  if (const auto* u = e.as<UnionNode>()) {
    for (const auto& part : u->parts) {
      if (member(s, part)) return true;
    }
    return false;
  }
  const auto* a = e.as<AffineNode>();
  return member(a->map.invert(s), *a->child);
}

// Some point of the middle-thirds set on [lo, hi] lies in (s - d, s + d)
// other than s itself.
inline bool cantor_near(const Rational& s, const Rational& d, Rational lo, Rational hi) {
  for (int guard = 0; guard < 4000; ++guard) {
    for (const Rational& v : {lo, hi}) {
      if (v != s && abs(v - s) < d) return true;
    }
    if (s + d <= lo || s - d >= hi) return false;
    // The ball now lies strictly inside [lo, hi] and misses both endpoints.
    const Rational third = (hi - lo) / Rational(3);
    if (s + d <= lo + third) {
      hi = lo + third;
    } else if (s - d >= hi - third) {
      lo = hi - third;
    } else if (s - d >= lo + third && s + d <= hi - third) {
      return false;  // inside the removed middle
    } else {
      return true;  // reaches an endpoint of a kept third
    }
  }
  throw std::logic_error("cantor_near did not settle");
}

// Some point of e other than s lies in the open ball (s - d, s + d).
inline bool near(const Rational& s, const Rational& d, const ClosedSet& e) {
  using namespace liouville;
  if (e.as<EmptyNode>()) return false;
  if (const auto* p = e.as<PointsNode>()) {
    for (const auto& v : p->points) {
      if (v != s && abs(v - s) < d) return true;
    }
    return false;
  }
  if (const auto* i = e.as<IntervalNode>()) {
    if (i->a == i->b) return i->a != s && abs(i->a - s) < d;
    return s + d > i->a && s - d < i->b;
  }
  if (const auto* r = e.as<RayNode>()) {
    return r->direction == RayDirection::kLeft ? s - d < r->endpoint : s + d > r->endpoint;
  }
  if (const auto* c = e.as<CantorNode>()) return cantor_near(s, d, c->a, c->b);
  if (e.as<SLiouvilleNode>()) throw std::logic_error("oracle does not model the Liouville leaf");
  if (const auto* t = e.as<TowerNode>()) {
    if (abs(s - t->limit) < d) return true;  // the limit itself, or clusters piling up at s
    const Bounds cb = *bounds(*t->child);
    const Rational reach = abs(s - t->limit) - d;
    if (reach.is_zero()) {
      // The limit sits on the boundary of the ball: clusters close to it are
      // inside exactly when some of them lie on the side of s.
      return t->ratio.sign() < 0 || t->scale.sign() == (s - t->limit).sign();
    }
    Rational f = t->scale;
    while (abs(f) * *cb.hi > reach) {
      if (near((s - t->limit) / f, d / abs(f), *t->child)) return true;
      f = f * t->ratio;
    }
    return false;
  }
  if (const auto* u = e.as<UnionNode>()) {
    for (const auto& part : u->parts) {
      if (near(s, d, part)) return true;
    }
    return false;
  }
  const auto* a = e.as<AffineNode>();
  return near(a->map.invert(s), d / abs(a->map.slope), *a->child);
}

// Accumulation point test on the ladder d = 10^0, 10^-1, ..., 10^-40. A
// point within the smallest d is within every larger one, so only the last
// rung needs evaluating.
inline bool accumulates(const Rational& s, const ClosedSet& e) {
  Rational d(1);
  for (int k = 0; k < 40; ++k) d = d / Rational(10);
  return near(s, d, e);
}

}  // namespace oracle
