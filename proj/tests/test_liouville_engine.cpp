#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liouville/diophantine.hpp"
#include "liouville/factorial_digits.hpp"
#include "liouville/generators.hpp"
#include "liouville/refutation.hpp"
#include "liouville/witness.hpp"
#include "oracles.hpp"

using namespace liouville;

namespace {

Rational q(long a, long b = 1) { return Rational(Integer(a), Integer(b)); }

const FactorialDigitNumber& zero_y() {
  static const auto x = FactorialDigitNumber::from_seed("|0");
  return x;
}
const FactorialDigitNumber& one_y() {
  static const auto x = FactorialDigitNumber::from_seed("|1");
  return x;
}

Witness make(long p, long qq, unsigned n) {
  Witness w;
  w.p = p;
  w.q = qq;
  w.n = n;
  return w;
}

// Reference check of 0 < |x - p/q| < q^{-n} through a depth-d enclosure.
bool strictly_inside(const oracle::Seed& s, const Witness& w, unsigned d) {
  const mpq_class c(w.p, w.q);
  mpq_class h = 1;
  for (unsigned i = 0; i < w.n; ++i) h /= mpq_class(w.q);
  const mpq_class lo = oracle::partial_sum(s, d);
  const mpq_class hi = lo + oracle::tail(d);
  return (lo > c && hi < c + h) || (hi < c && lo > c - h);
}

}  // namespace

TEST_CASE("witness for the all-zero-y member at n=2") {
  const Witness w = liouville_witness(zero_y(), 2);
  CHECK(w.p == 10);
  CHECK(w.q == 100);
  CHECK_FALSE(w.verified);
  CHECK(verify_witness(bounding_interval(zero_y(), 3), w));
  const Witness c = certify_witness(zero_y(), w);
  CHECK(c.verified);
  CHECK(witness_line(c) == "WITNESS n=2 p=10 q=100 ok=true");
}

TEST_CASE("witness for the all-one-y member at n=1") {
  const Witness w = liouville_witness(one_y(), 1);
  CHECK(w.p == 0);
  CHECK(w.q == 10);
  const Witness c = certify_witness(one_y(), w);
  CHECK(c.verified);
  CHECK(witness_line(c) == "WITNESS n=1 p=0 q=10 ok=true");
}

TEST_CASE("verify_witness on hand-made witnesses") {
  // |x - 1/2| is about 0.4 < 1/2.
  CHECK(verify_witness(bounding_interval(zero_y(), 1), make(1, 2, 1)));
  // Enclosure sitting on p/q.
  const Enclosure on{q(1, 10), q(1, 10)};
  CHECK_FALSE(verify_witness(on, make(1, 10, 1)));
  // Straddles p/q: cannot tell.
  CHECK_THROWS_AS(verify_witness(Enclosure{q(1, 20), q(1, 5)}, make(1, 10, 1)), InconclusiveEnclosure);
  // Clearly outside the 1/q^n window.
  CHECK_FALSE(verify_witness(Enclosure{q(1, 2), q(3, 4)}, make(1, 10, 2)));
  // Straddles c + h.
  CHECK_THROWS_AS(verify_witness(Enclosure{q(1, 10), q(1, 5)}, make(1, 10, 2)), InconclusiveEnclosure);
  CHECK_THROWS(verify_witness(on, make(1, 1, 1)));
}

TEST_CASE("witness caps") {
  CHECK_THROWS_AS(liouville_witness(zero_y(), 0), CapExceeded);
  CHECK_THROWS_AS(liouville_witness(zero_y(), 9), CapExceeded);
}

TEST_CASE("witnesses certify for random members at n=1..6") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const auto x = random_member(rng);
    const oracle::Seed s(x);
    for (unsigned n = 1; n <= 6; ++n) {
      const Witness w = liouville_witness(x, n);
      CHECK(w.q == oracle::ten_to(oracle::fact(n)));
      CHECK(oracle::fraction(w.p, w.q) == oracle::partial_sum(s, n));
      const Witness c = certify_witness(x, w);
      REQUIRE(c.verified);
      CHECK(c.certified_depth >= n + 2);
      CHECK(c.certified_depth <= n + 3);
      CHECK(strictly_inside(s, c, c.certified_depth));
    }
  }
}

TEST_CASE("odd levels can need one extra depth") {
  // x_1 = 0 (block 0 is (1,0)) and x_2 = 0 (block 1 is (0,1)): the depth-3
  // enclosure starts exactly at p/q.
  const auto x = FactorialDigitNumber::from_seed("01|0");
  const Witness w = liouville_witness(x, 1);
  CHECK_THROWS_AS(verify_witness(bounding_interval(x, 3), w), InconclusiveEnclosure);
  const Witness c = certify_witness(x, w);
  CHECK(c.verified);
  CHECK(c.certified_depth == 4);
}

TEST_CASE("levels past the enclosure cap rest on the tail chain") {
  for (unsigned n = 7; n <= 8; ++n) {
    const Witness c = certify_witness(zero_y(), liouville_witness(zero_y(), n));
    CHECK(c.verified);
    CHECK(c.certified_depth == 0);
  }
  // A witness that is not the construction cannot use the chain.
  Witness w = liouville_witness(zero_y(), 7);
  w.p += 1;
  CHECK_FALSE(certify_witness(zero_y(), w).verified);
}

TEST_CASE("odd partial sums can skip two positions") {
  // x = 1,0,1,0,0,1,...: after 1/10 + 1/10^6 the next 1 is x_5 at 6!.
  const auto x = FactorialDigitNumber::from_seed("00|1");
  CHECK(refute_rational(x, partial_sum(x, 3)).differing_position == 720);
}

TEST_CASE("refutation examples") {
  const IrrationalityCertificate a = refute_rational(zero_y(), q(1, 10));
  CHECK(a.differing_position == 6);
  CHECK(a.member_digit == 1);
  CHECK(a.candidate_digit == 0);
  CHECK(certificate_line(a) == "REFUTE pos=6 member=1 candidate=0");

  const IrrationalityCertificate b = refute_rational(one_y(), q(1, 100));
  CHECK(b.differing_position == 24);
  CHECK(b.member_digit == 1);
  CHECK(check_certificate(one_y(), b));
}

TEST_CASE("partial sums as candidates differ at the next 1") {
  Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    const auto x = random_member(rng);
    const oracle::Seed s(x);
    for (unsigned n = 1; n <= 3; ++n) {
      const IrrationalityCertificate c = refute_rational(x, partial_sum(x, n));
      // (n+1)! or (n+2)! for even n; odd n can also reach (n+3)!.
      const unsigned i_next = oracle::next_one(s, n);
      CHECK(i_next <= (n % 2 == 0 ? n + 2 : n + 3));
      const std::uint64_t next = oracle::fact(i_next);
      CHECK(c.differing_position == next);
      CHECK(c.member_digit == 1);
      CHECK(c.candidate_digit == 0);
    }
  }
}

TEST_CASE("certificates are re-derived digit by digit") {
  Rng rng(33);
  for (int i = 0; i < 40; ++i) {
    const auto x = random_member(rng);
    const oracle::Seed s(x);
    for (int j = 0; j < 20; ++j) {
      const Rational c = random_unit_rational(rng, 10000);
      const IrrationalityCertificate cert = refute_rational(x, c);
      CHECK(check_certificate(x, cert));
      const std::uint64_t pos = cert.differing_position;
      const std::string ref = oracle::long_division(c.numerator().get_ui(), c.denominator().get_ui(), pos);
      for (std::uint64_t k = 1; k < pos; ++k) REQUIRE(ref[k - 1] - '0' == oracle::member_digit(s, k));
      CHECK(ref[pos - 1] - '0' == cert.candidate_digit);
      CHECK(oracle::member_digit(s, pos) == cert.member_digit);
      CHECK(cert.member_digit != cert.candidate_digit);
    }
  }
}

TEST_CASE("refutation exponent and scan bounds") {
  CHECK(refutation_exponent(Integer(2)) == 2);
  CHECK(refutation_exponent(Integer(999)) == 2);
  CHECK(refutation_exponent(Integer(1000)) == 3);
  CHECK(stated_scan_bound(2) == 10);
  CHECK(stated_scan_bound(3) == 42);
  CHECK(guaranteed_scan_bound(2) == 24);
  CHECK(guaranteed_scan_bound(3) == 720);
  // The documented 1/100 case lands past the stated bound but within the
  // guaranteed one.
  const IrrationalityCertificate b = refute_rational(one_y(), q(1, 100));
  CHECK(b.m == 2);
  CHECK(b.differing_position > stated_scan_bound(b.m));
  CHECK(b.differing_position <= guaranteed_scan_bound(b.m));
}

TEST_CASE("refutation positions respect the guaranteed bound") {
  Rng rng(34);
  for (int i = 0; i < 30; ++i) {
    const auto x = random_member(rng);
    for (unsigned n = 1; n <= 3; ++n) {
      const Rational c = partial_sum(x, n);
      if (c.denominator() > 1000000) continue;
      const IrrationalityCertificate cert = refute_rational(x, c);
      CHECK(cert.differing_position <= guaranteed_scan_bound(cert.m));
    }
  }
}

TEST_CASE("refutation domain and cap") {
  CHECK_THROWS_AS(refute_rational(zero_y(), q(1)), std::domain_error);
  CHECK_THROWS_AS(refute_rational(zero_y(), q(-1, 3)), std::domain_error);
  CHECK_THROWS_AS(refute_rational(zero_y(), q(1, 1000003)), CapExceeded);
  // Zero is a candidate like any other.
  CHECK(refute_rational(zero_y(), q(0)).differing_position == 1);
  CHECK(refute_rational(one_y(), q(0)).differing_position == 2);
}

TEST_CASE("in_U_n examples") {
  const auto third_2 = in_U_n(q(1, 3), 2);
  REQUIRE(third_2);
  CHECK(third_2->p == 1);
  CHECK(third_2->q == 2);
  CHECK_FALSE(in_U_n(q(1, 3), 3));
  CHECK_FALSE(in_U_n(q(5), 1));
  CHECK(in_U_n(q(5), 0));
  CHECK_FALSE(oracle::brute_U(5, 1, 1));
  CHECK_FALSE(oracle::brute_U(1, 3, 3));
}

TEST_CASE("approximants are genuine") {
  Rng rng(35);
  for (int i = 0; i < 150; ++i) {
    const Rational x = random_rational(rng, 500);
    for (unsigned n = 0; n <= 6; ++n) {
      const auto a = in_U_n(x, n);
      if (!a) continue;
      CHECK(a->q >= 2);
      const Rational d = (x - Rational(a->p, a->q)).abs();
      CHECK(d.sign() > 0);
      Rational h(1);
      for (unsigned k = 0; k < n; ++k) h = h / Rational(a->q);
      CHECK(d < h);
    }
  }
}

TEST_CASE("in_U_n agrees with exhaustive search") {
  Rng rng(36);
  for (int i = 0; i < 60; ++i) {
    const Rational x = random_rational(rng, 200);
    const long a = x.numerator().get_si(), b = x.denominator().get_si();
    for (unsigned n = 0; n <= 5; ++n) {
      const auto lib = in_U_n(x, n);
      const auto ref = oracle::brute_U(a, b, n);
      REQUIRE(lib.has_value() == ref.has_value());
      if (lib) CHECK(lib->q == *ref);
    }
  }
}

TEST_CASE("layers are nested") {
  Rng rng(37);
  for (int i = 0; i < 150; ++i) {
    const Rational x = random_rational(rng, 500);
    for (unsigned n = 0; n < 8; ++n) {
      if (in_U_n(x, n + 1)) CHECK(in_U_n(x, n));
    }
  }
}

TEST_CASE("first Diophantine layers") {
  CHECK(diophantine_layer(q(1, 3), 4).first_diophantine_layer == 3);
  CHECK(diophantine_layer(q(1, 2), 4).first_diophantine_layer == 2);
  CHECK(diophantine_layer(q(0), 4).first_diophantine_layer == 1);
  CHECK(diophantine_layer(q(5), 4).first_diophantine_layer == 1);
  CHECK(diophantine_layer(q(-7), 0).first_diophantine_layer == 1);
  // The first layer is reported even when it lies past n_max.
  CHECK(diophantine_layer(q(1, 3), 1).first_diophantine_layer == 3);
  const LayerReport r = diophantine_layer(q(1, 3), 4);
  REQUIRE(r.verdicts.size() == 5);
  CHECK(r.verdicts[2].in_U());
  CHECK_FALSE(r.verdicts[3].in_U());
  CHECK_THROWS_AS(diophantine_layer(q(1, 3), 13), CapExceeded);
}

TEST_CASE("first layer is bounded by the denominator") {
  Rng rng(38);
  for (int i = 0; i < 200; ++i) {
    const Rational x = random_rational(rng, 500);
    const unsigned first = diophantine_layer(x, 0).first_diophantine_layer;
    const unsigned log2b = static_cast<unsigned>(mpz_sizeinbase(x.denominator().get_mpz_t(), 2)) - 1;
    CHECK(first <= log2b + 2);
    CHECK_FALSE(in_U_n(x, first));
    for (unsigned n = 0; n < first; ++n) CHECK(in_U_n(x, n));
  }
}

TEST_CASE("members lie in every layer through their witnesses") {
  Rng rng(39);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_member(rng);
    for (unsigned n = 1; n <= 6; ++n) CHECK(certify_witness(x, liouville_witness(x, n)).verified);
  }
}

TEST_CASE("large denominators hit the search cap") {
  // A ratio of consecutive Fibonacci numbers near 10^30 is badly
  // approximable, so no small q ends the search early.
  Integer f0 = 1, f1 = 1;
  while (f1 < pow10(30)) {
    const Integer f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
  CHECK_THROWS_AS(in_U_n(Rational(f0, f1), 4), CapExceeded);
}
