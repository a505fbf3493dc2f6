#include "liouville/verify.hpp"

#include <algorithm>
#include <functional>

#include "liouville/diophantine.hpp"
#include "liouville/factorial_digits.hpp"
#include "liouville/generators.hpp"
#include "liouville/perturbation.hpp"
#include "liouville/refutation.hpp"
#include "liouville/sexpr.hpp"
#include "liouville/topology.hpp"
#include "liouville/witness.hpp"

namespace liouville {

bool SuiteReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok(); });
}

std::string SuiteReport::to_text() const {
  std::string out;
  for (const auto& c : cases) {
    out += std::string(c.ok() ? "PASS " : "FAIL ") + suite + "/" + c.name + " " + std::to_string(c.passed) + "/" +
           std::to_string(c.total);
    if (!c.ok()) out += " first failure: " + c.first_failure;
    out += "\n";
  }
  return out;
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool condition, const std::string& label) {
    ++result_.total;
    if (condition) {
      ++result_.passed;
    } else if (result_.first_failure.empty()) {
      result_.first_failure = label;
    }
  }

  // Runs `body`, counting an exception as a failure.
  void run(const std::function<bool()>& body, const std::string& label) {
    bool ok = false;
    std::string text = label;
    try {
      ok = body();
    } catch (const std::exception& e) {
      text += " threw: " + std::string(e.what());
    }
    check(ok, text);
  }

  CaseResult done() { return std::move(result_); }

 private:
  CaseResult result_;
};

std::string seed_text(const FactorialDigitNumber& x) { return x.generator().generator().to_string(); }

CaseResult witness_case(Rng& rng) {
  Tally t("witness");
  for (int i = 0; i < 20; ++i) {
    const auto x = random_member(rng);
    for (unsigned n = 1; n <= 6; ++n) {
      t.run([&] { return certify_witness(x, liouville_witness(x, n)).verified; },
              seed_text(x) + " n=" + std::to_string(n));
    }
  }
  return t.done();
}

CaseResult uniqueness_case(Rng& rng) {
  Tally t("uniqueness");
  for (int i = 0; i < 50; ++i) {
    const auto [a, b] = random_distinct_pair(rng);
    t.run(
        [&] {
          const auto order = compare_members(a, b);
          if (order == std::strong_ordering::equal) return false;
          const std::size_t k = *a.generator().first_difference(b.generator());
          const bool a_larger = a.generator().x(k) > b.generator().x(k);
          if (a_larger != (order == std::strong_ordering::greater)) return false;
          if (k + 2 > kDepthCap) return true;
          const Enclosure ea = bounding_interval(a, static_cast<unsigned>(k) + 2);
          const Enclosure eb = bounding_interval(b, static_cast<unsigned>(k) + 2);
          return a_larger ? eb.hi < ea.lo : ea.hi < eb.lo;
        },
        seed_text(a) + " vs " + seed_text(b));
  }
  return t.done();
}

CaseResult bijection_case(Rng& rng) {
  Tally t("bijection");
  for (int i = 0; i < 50; ++i) {
    const BitStream y = random_stream(rng);
    const PairedBitSequence x = decode_pairs(y);
    t.check(encode_pairs(x) == y && decode_pairs(encode_pairs(x)) == x &&
                PairedBitSequence::from_x_stream(x.x_stream()) == x,
            y.to_string());
  }
  return t.done();
}

CaseResult perturbation_case(Rng& rng) {
  Tally t("perturbation");
  for (int i = 0; i < 10; ++i) {
    const auto a = random_member(rng);
    for (unsigned e = 1; e <= 8; ++e) {
      const Rational eps = inverse_pow10(e);
      t.run(
          [&] {
            const Perturbation p = perturbation(a, eps);
            const RunLengthDecimal d = p.distance();
            const Rational proof_bound = Rational(2) * inverse_pow10(2 * p.block);
            return !(p.perturbed == a) && compare_members(a, p.perturbed) != std::strong_ordering::equal &&
                   !d.is_zero() && d.compare(eps) < 0 && d.compare(proof_bound) <= 0;
          },
          seed_text(a) + " eps=10^-" + std::to_string(e));
    }
  }
  return t.done();
}

CaseResult stability_case(Rng& rng) {
  Tally t("stability");
  for (int i = 0; i < 30; ++i) {
    const auto a = random_member(rng);
    const auto m = static_cast<unsigned>(i % 7);
    const auto b = random_member_agreeing(rng, a, m);
    t.run(
        [&] {
          for (unsigned k = 0; k < m; ++k) {
            if (a.generator().x(k) != b.generator().x(k)) return false;
          }
          return distance_enclosure(a, b, std::min(m + 2, kDepthCap)).hi < agreement_bound(m);
        },
        seed_text(a) + " vs " + seed_text(b) + " m=" + std::to_string(m));
  }
  return t.done();
}

CaseResult refutation_case(Rng& rng) {
  Tally t("refutation");
  for (int i = 0; i < 20; ++i) {
    const auto x = random_member(rng);
    for (int j = 0; j < 10; ++j) {
      const Rational c = random_unit_rational(rng, 10'000);
      t.run([&] { return check_certificate(x, refute_rational(x, c)); }, seed_text(x) + " vs " + c.to_string());
    }
  }
  return t.done();
}

bool approximant_valid(const Rational& x, const Approximant& a, unsigned n) {
  if (a.q < 2) return false;
  const Rational d = (x - Rational(a.p, a.q)).abs();
  Integer qn;
  mpz_pow_ui(qn.get_mpz_t(), a.q.get_mpz_t(), n);
  return d.sign() > 0 && d < Rational(Integer(1), qn);
}

CaseResult layers_case(Rng& rng) {
  Tally t("layers");
  const std::pair<const char*, unsigned> anchors[] = {{"1/3", 3}, {"1/2", 2}, {"5", 1}, {"-7", 1}, {"0", 1}};
  for (const auto& [text, layer] : anchors) {
    t.run([&] { return diophantine_layer(Rational::parse(text), 6).first_diophantine_layer == layer; },
            std::string("anchor ") + text);
  }
  for (int i = 0; i < 50; ++i) {
    const Rational x = random_rational(rng, 500);
    t.run(
        [&] {
          const LayerReport r = diophantine_layer(x, 6);
          for (const auto& v : r.verdicts) {
            if (v.approximant && !approximant_valid(x, *v.approximant, v.n)) return false;
            if (v.n > 0 && v.in_U() && !r.verdicts[v.n - 1].in_U()) return false;
          }
          return !in_U_n(x, r.first_diophantine_layer).has_value();
        },
        x.to_string());
  }
  return t.done();
}

CaseResult examples_case() {
  Tally t("examples");
  const std::pair<const char*, const char*> normal_forms[] = {
      {"(union (interval 0 1) (interval 1/2 3/2))", "(interval 0 3/2)"},
      {"(affine 2 1 (points 0 1))", "(points 1 3)"},
      {"(interval 1 1)", "(points 1)"},
  };
  for (const auto& [in, out] : normal_forms) {
    t.run([&] { return normalize(parse_set_expr(in)).to_sexpr() == out; }, in);
  }
  const std::pair<const char*, const char*> derived[] = {
      {"(tower 0 1 1/2 (points 1))", "(points 0)"},
      {"(union (interval 0 1) (tower 2 1 1/2 (points 1)))", "(union (interval 0 1) (points 2))"},
      {"(points 0 1)", "(empty)"},
  };
  for (const auto& [in, out] : derived) {
    t.run([&] { return derived_set(parse_set_expr(in)).to_sexpr() == out; }, std::string("derive ") + in);
  }
  t.run([] { return cb_rank(parse_set_expr("(tower 0 1 1/2 (points 1))")).rank == 2; }, "rank of tower");
  t.run([] { return find_cantor_subset(parse_set_expr("(interval 0 1)"))->to_sexpr() == "(cantor 1/3 2/3)"; },
          "cantor subset of unit interval");
  t.run([] { return is_cantor(ClosedSet::sliouville()); }, "liouville leaf is cantor");
  t.run([] { return *distance_to(Rational(1) / Rational(2), ClosedSet::cantor(0, 1)) == Rational(1) / Rational(6); },
          "distance to cantor");
  return t.done();
}

CaseResult union_derivative_case(Rng& rng) {
  Tally t("union-derivative");
  for (int i = 0; i < 50; ++i) {
    std::vector<ClosedSet> parts;
    const int k = 1 + i % 4;
    for (int j = 0; j < k; ++j) parts.push_back(random_expression(rng, {2, true, true}));
    const auto r = static_cast<unsigned>(i % 4);
    t.run(
        [&] {
          std::vector<ClosedSet> derived_parts;
          for (const auto& p : parts) derived_parts.push_back(cb_derivative(p, r).set);
          return cb_derivative(ClosedSet::union_of(parts), r).set ==
                 normalize(ClosedSet::union_of(derived_parts));
        },
        ClosedSet::union_of(parts).to_sexpr());
  }
  return t.done();
}

CaseResult equivariance_case(Rng& rng) {
  Tally t("affine-equivariance");
  const AffineMap maps[] = {{Rational(2), Rational(1)}, {Rational(-1), Rational(0)}, {Rational(1) / Rational(3), Rational(-2)}};
  for (int i = 0; i < 50; ++i) {
    const ClosedSet e = random_expression(rng);
    const AffineMap& m = maps[i % 3];
    t.run([&] { return derived_set(affine_image(m, e)) == affine_image(m, derived_set(e)); }, e.to_sexpr());
  }
  return t.done();
}

CaseResult rank_case(Rng& rng) {
  Tally t("rank");
  for (unsigned d = 0; d <= 4; ++d) {
    t.run([&] { return cb_rank(nested_tower(d)).rank == d + 1; }, "nested depth " + std::to_string(d));
  }
  for (int i = 0; i < 50; ++i) {
    const ClosedSet e = random_expression(rng);
    t.run(
        [&] {
          const CBRank r = cb_rank(e);
          return r.rank <= tower_depth(e) + 1 && derived_set(r.fixpoint) == r.fixpoint;
        },
        e.to_sexpr());
  }
  return t.done();
}

CaseResult bendixson_case(Rng& rng) {
  Tally t("bendixson");
  for (int i = 0; i < 40; ++i) {
    const ClosedSet e = random_expression(rng);
    t.run(
        [&] {
          const BendixsonDecomposition b = bendixson_decompose(e);
          const Perfectness p = perfectness(b.kernel);
          if (p == Perfectness::kNotPerfect) return false;
          for (const auto& x : sample_members(e)) {
            if (!member_of(x, b.kernel) && !b.in_scattered_part(x)) return false;
          }
          return true;
        },
        e.to_sexpr());
  }
  return t.done();
}

CaseResult cantor_subset_case(Rng& rng) {
  Tally t("cantor-subset");
  for (int i = 0; i < 30; ++i) {
    const ClosedSet e = random_uncountable_expression(rng);
    t.run(
        [&] {
          const auto k = find_cantor_subset(e);
          if (!k || !is_cantor(*k)) return false;
          for (const auto& x : sample_members(*k)) {
            if (!member_of(x, e)) return false;
          }
          return true;
        },
        e.to_sexpr());
  }
  return t.done();
}

CaseResult measure_case(Rng& rng) {
  Tally t("measure-interior");
  for (int i = 0; i < 50; ++i) {
    const ClosedSet e = random_expression(rng);
    t.run(
        [&] {
          Measure m;
          try {
            m = lebesgue_measure(e);
          } catch (const std::domain_error&) {
            return true;  // overlapping massive components: no exact value
          }
          return m.infinite || m.value.sign() > 0 || interior_is_empty(e);
        },
        e.to_sexpr());
  }
  return t.done();
}

}  // namespace

SuiteReport run_liouville_suite(const VerifyOptions& options) {
  Rng rng(options.seed);
  SuiteReport report{"liouville", {}};
  report.cases.push_back(witness_case(rng));
  report.cases.push_back(uniqueness_case(rng));
  report.cases.push_back(bijection_case(rng));
  report.cases.push_back(perturbation_case(rng));
  report.cases.push_back(stability_case(rng));
  report.cases.push_back(refutation_case(rng));
  report.cases.push_back(layers_case(rng));
  if (options.inject_failure) {
    Tally t("injected");
    const auto x = random_member(rng);
    t.check(compare_members(x, x) != std::strong_ordering::equal, "member compared unequal to itself");
    report.cases.push_back(t.done());
  }
  return report;
}

SuiteReport run_topology_suite(const VerifyOptions& options) {
  Rng rng(options.seed);
  SuiteReport report{"topology", {}};
  report.cases.push_back(examples_case());
  report.cases.push_back(union_derivative_case(rng));
  report.cases.push_back(equivariance_case(rng));
  report.cases.push_back(rank_case(rng));
  report.cases.push_back(bendixson_case(rng));
  report.cases.push_back(cantor_subset_case(rng));
  report.cases.push_back(measure_case(rng));
  if (options.inject_failure) {
    Tally t("injected");
    t.check(is_cantor(ClosedSet::interval(0, 1)), "interval reported as a Cantor set");
    report.cases.push_back(t.done());
  }
  return report;
}

}  // namespace liouville
