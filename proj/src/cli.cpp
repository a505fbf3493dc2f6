#include "liouville/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "liouville/diophantine.hpp"
#include "liouville/factorial_digits.hpp"
#include "liouville/perturbation.hpp"
#include "liouville/refutation.hpp"
#include "liouville/sexpr.hpp"
#include "liouville/topology.hpp"
#include "liouville/verify.hpp"
#include "liouville/witness.hpp"

namespace liouville {

namespace {

// Input rejected after parsing succeeded; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& text) {
  try {
    return parse_rational_literal(text);
  } catch (const ParseError&) {
    throw UsageError("malformed rational '" + text + "'");
  }
}

std::string enclosure_text(const Enclosure& e) { return "[" + e.lo.to_string() + ", " + e.hi.to_string() + "]"; }

// Depth n with n! <= digits < (n+1)!, clamped to [1, 8].
unsigned depth_for_digits(std::uint64_t digits) {
  unsigned n = 1;
  while (n < kDepthCap && factorial_u64(n + 1) <= digits) ++n;
  return n;
}

CommandOutcome member_command(const std::string& seed, std::uint64_t digits) {
  const auto x = FactorialDigitNumber::from_seed(seed);
  const unsigned depth = depth_for_digits(digits);
  std::ostringstream out;
  out << "seed: " << x.generator().generator().to_string() << "\n";
  out << "digits: " << render_decimal(x, digits) << "\n";
  out << "enclosure depth " << depth << ": " << enclosure_text(bounding_interval(x, depth)) << "\n";
  return {0, out.str()};
}

CommandOutcome witness_command(const std::string& seed, unsigned n) {
  const auto x = FactorialDigitNumber::from_seed(seed);
  const Witness w = certify_witness(x, liouville_witness(x, n));
  std::string out = witness_line(w) + "\n";
  if (w.certified_depth > 0) {
    out += "verdict: enclosure at depth " + std::to_string(w.certified_depth) + " lies within 1/q^n of p/q\n";
  } else {
    out += std::string("verdict: tail bound chain ") + (w.verified ? "holds" : "fails") + "\n";
  }
  return {w.verified ? 0 : 1, out};
}

CommandOutcome refute_command(const std::string& seed, const std::string& rational) {
  const auto x = FactorialDigitNumber::from_seed(seed);
  const IrrationalityCertificate cert = refute_rational(x, rational_arg(rational));
  return {check_certificate(x, cert) ? 0 : 1, certificate_line(cert) + "\n"};
}

CommandOutcome classify_command(const std::string& rational, unsigned n_max) {
  const LayerReport r = diophantine_layer(rational_arg(rational), n_max);
  std::ostringstream out;
  out << "x = " << r.x << "\n";
  for (const auto& v : r.verdicts) {
    out << "n=" << v.n << " in_U=" << (v.in_U() ? "true" : "false");
    if (v.approximant) out << " p=" << v.approximant->p.get_str() << " q=" << v.approximant->q.get_str();
    out << "\n";
  }
  out << "first Diophantine layer: " << r.first_diophantine_layer << "\n";
  return {0, out.str()};
}

CommandOutcome perturb_command(const std::string& seed, const std::string& epsilon) {
  const auto a = FactorialDigitNumber::from_seed(seed);
  const Rational eps = rational_arg(epsilon);
  const Perturbation p = perturbation(a, eps);
  const RunLengthDecimal d = p.distance();
  const bool below = d.compare(eps) < 0;
  std::ostringstream out;
  out << "seed: " << p.perturbed.generator().generator().to_string() << "\n";
  out << "block: " << p.block << " (x_" << 2 * p.block << ", x_" << 2 * p.block + 1 << " at positions "
      << p.lead_position << ", " << p.trail_position << ")\n";
  out << "a-b: " << (p.sign > 0 ? "+" : "-") << "(10^-" << p.lead_position << " - 10^-" << p.trail_position << ")\n";
  out << "|a-b| digits: " << d.to_string() << "\n";
  out << "|a-b| < epsilon: " << (below ? "true" : "false") << "\n";
  return {below ? 0 : 1, out.str()};
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

CommandOutcome topology_command(const std::string& expr, const std::vector<std::string>& op) {
  const ClosedSet e = parse_set_expr(expr);
  const std::string& name = op.front();
  const auto arg = [&]() -> const std::string& {
    if (op.size() < 2) throw UsageError("operation '" + name + "' needs an argument");
    return op[1];
  };
  if (name != "derive" && name != "member" && name != "distance" && op.size() > 1) {
    throw UsageError("operation '" + name + "' takes no argument");
  }
  std::ostringstream out;
  if (name == "derive") {
    const std::string& k_text = arg();
    if (k_text.empty() || !std::all_of(k_text.begin(), k_text.end(), ::isdigit) || k_text.size() > 3) {
      throw UsageError("derivative order must be a natural number");
    }
    const Derivative d = cb_derivative(e, static_cast<unsigned>(std::stoul(k_text)));
    out << d.set << "\n";
    if (d.stabilized_at) out << "stabilized at " << *d.stabilized_at << "\n";
  } else if (name == "rank") {
    const CBRank r = cb_rank(e);
    out << "rank: " << r.rank << "\nfixpoint: " << r.fixpoint << "\nscattered: " << bool_text(r.scattered()) << "\n";
  } else if (name == "bendixson") {
    const BendixsonDecomposition b = bendixson_decompose(e);
    out << "kernel: " << b.kernel << "\nscattered: " << b.scattered << "\n";
  } else if (name == "condense") {
    out << condensation_set(e) << "\n";
  } else if (name == "cantor-subset") {
    const auto k = find_cantor_subset(e);
    out << (k ? k->to_sexpr() : std::string("none")) << "\n";
  } else if (name == "measure") {
    out << lebesgue_measure(e).to_string() << "\n";
  } else if (name == "member") {
    out << bool_text(member_of(rational_arg(arg()), e)) << "\n";
  } else if (name == "distance") {
    const auto d = distance_to(rational_arg(arg()), e);
    out << (d ? d->to_string() : std::string("none")) << "\n";
  } else if (name == "normalize") {
    out << normalize(e) << "\n";
  } else if (name == "perfect") {
    const Perfectness p = perfectness(e);
    out << (p == Perfectness::kPerfect ? "true" : (p == Perfectness::kNotPerfect ? "false" : "false (empty set)"))
        << "\n";
  } else if (name == "cantor") {
    out << bool_text(is_cantor(e)) << "\n";
  } else if (name == "interior-empty") {
    out << bool_text(interior_is_empty(e)) << "\n";
  } else if (name == "uncountable") {
    out << bool_text(is_uncountable(e)) << "\n";
  } else {
    throw UsageError("unknown topology operation '" + name + "'");
  }
  return {0, out.str()};
}

CommandOutcome verify_command(const std::string& suite, bool inject_failure, std::uint64_t seed) {
  VerifyOptions options{seed, inject_failure};
  std::vector<SuiteReport> reports;
  if (suite == "all" || suite == "liouville") reports.push_back(run_liouville_suite(options));
  if (suite == "all" || suite == "topology") reports.push_back(run_topology_suite(options));
  bool ok = true;
  std::string out;
  for (const auto& r : reports) {
    out += r.to_text();
    ok = ok && r.ok();
  }
  out += std::string("verify: ") + (ok ? "all cases passed" : "failures detected") + "\n";
  return {ok ? 0 : 1, out};
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact constructions on factorial-digit Liouville numbers and closed subsets of the line",
               "liouville"};
  app.require_subcommand(1);

  std::string seed;
  std::string rational;
  std::string epsilon;
  std::string expr;
  std::vector<std::string> op;
  std::string suite = "all";
  std::uint64_t digits = 0;
  unsigned n = 0;
  unsigned n_max = 0;
  bool inject = false;
  std::uint64_t verify_seed = VerifyOptions{}.seed;

  auto* member = app.add_subcommand("member", "Decimal digits and an enclosure of a member");
  member->add_option("--seed", seed, "y-stream prefix|period")->required();
  member->add_option("--digits", digits, "digits to render")->required()->check(CLI::Range(1, 1'000'000));

  auto* witness = app.add_subcommand("witness", "Liouville witness at level n");
  witness->add_option("--seed", seed, "y-stream prefix|period")->required();
  witness->add_option("--n", n, "level")->required()->check(CLI::Range(1, 8));

  auto* refute = app.add_subcommand("refute", "Position where a rational differs from a member");
  refute->add_option("--seed", seed, "y-stream prefix|period")->required();
  refute->add_option("--rational", rational, "candidate a/b")->required();

  auto* classify = app.add_subcommand("classify", "Layers U_n containing a rational");
  classify->add_option("--rational", rational, "a/b")->required();
  classify->add_option("--nmax", n_max, "largest n")->required()->check(CLI::Range(0, 12));

  auto* perturb = app.add_subcommand("perturb", "A nearby member");
  perturb->add_option("--seed", seed, "y-stream prefix|period")->required();
  perturb->add_option("--epsilon", epsilon, "a/b > 0")->required();

  auto* topology = app.add_subcommand("topology", "Operations on closed-set expressions");
  topology->add_option("--expr", expr, "s-expression")->required();
  topology
      ->add_option("--op", op,
                   "derive k | rank | bendixson | condense | cantor-subset | measure | member x | distance x | "
                   "normalize | perfect | cantor | interior-empty | uncountable")
      ->required()
      ->expected(1, 2);

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", suite, "all | liouville | topology")
      ->check(CLI::IsMember({"all", "liouville", "topology"}));
  verify->add_flag("--inject-failure", inject, "add a deliberately failing case");
  verify->add_option("--seed", verify_seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    const CLI::App* scope = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    return {2, "error: " + std::string(e.what()) + "\n" + scope->help()};
  }

  try {
    if (member->parsed()) return member_command(seed, digits);
    if (witness->parsed()) return witness_command(seed, n);
    if (refute->parsed()) return refute_command(seed, rational);
    if (classify->parsed()) return classify_command(rational, n_max);
    if (perturb->parsed()) return perturb_command(seed, epsilon);
    if (topology->parsed()) return topology_command(expr, op);
    if (verify->parsed()) return verify_command(suite, inject, verify_seed);
  } catch (const std::exception& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  return {2, app.help()};
}

}  // namespace liouville
