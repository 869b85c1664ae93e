#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "quboc/errors.hpp"
#include "quboc/penalty.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/quadratize.hpp"
#include "quboc/registry.hpp"
#include "testutil.hpp"

using quboc::Assignment;
using quboc::PseudoBooleanPolynomial;
using quboc::QuadratizationReport;
using quboc::QuadratizationStrategy;
using quboc::Rational;
using quboc::VariableRegistry;

namespace {

PseudoBooleanPolynomial pb(const PseudoBooleanPolynomial::TermMap& terms) {
  return PseudoBooleanPolynomial::from_terms(terms);
}

PseudoBooleanPolynomial maxsat_cubic() {
  PseudoBooleanPolynomial::TermMap terms;
  terms[{"x2"}] = 1;
  terms[{"x3"}] = 1;
  terms[{"x1", "x3"}] = -1;
  terms[{"x2", "x3"}] = -2;
  terms[{"x1", "x2", "x3"}] = 1;
  return pb(terms);
}

/// Argmin assignments of `poly`, projected to `names`, as a mask set.
std::set<std::uint64_t> argmin_projection(const PseudoBooleanPolynomial& poly,
                                          const std::vector<std::string>& names) {
  return testutil::argmin_masks(poly, names);
}

}  // namespace

TEST_CASE("pair substitution reproduces the known cubic reduction") {
  VariableRegistry registry;
  const auto f = maxsat_cubic();
  const auto report = quboc::rosenberg_quadratize(f, registry, Rational(7));

  REQUIRE(report.substitutions.size() == 1);
  const auto& sub = report.substitutions[0];
  CHECK(sub.x == "x2");
  CHECK(sub.y == "x3");
  CHECK(sub.aux == "z1");
  CHECK(sub.constant == 7);

  PseudoBooleanPolynomial::TermMap expected;
  expected[{"x2"}] = 1;
  expected[{"x3"}] = 1;
  expected[{"z1"}] = 19;
  expected[{"x1", "x3"}] = -1;
  expected[{"x1", "z1"}] = 1;
  expected[{"x2", "x3"}] = 7;
  expected[{"x2", "z1"}] = -14;
  expected[{"x3", "z1"}] = -14;
  CHECK(report.output == pb(expected));
  CHECK(report.output.degree() == 2);
  CHECK(registry.auxiliary_variables().count("z1") == 1);

  SUBCASE("default penalty constant matches the derived one") {
    VariableRegistry fresh;
    const auto defaulted = quboc::rosenberg_quadratize(f, fresh);
    CHECK(defaulted.substitutions[0].constant == 7);
    CHECK(defaulted.output == report.output);
  }
}

TEST_CASE("pair gadget value table") {
  VariableRegistry registry;
  const auto f = maxsat_cubic();
  const auto report = quboc::rosenberg_quadratize(f, registry, Rational(7));
  const auto& gadget = report.substitutions[0].penalty;
  for (bool x : {false, true}) {
    for (bool y : {false, true}) {
      for (bool z : {false, true}) {
        const Assignment bits = {{"x2", x}, {"x3", y}, {"z1", z}};
        const Rational value = gadget.evaluate(bits);
        if (z == (x && y)) {
          CHECK(value == 0);
        } else if (x && y) {
          CHECK(value == 7);
        } else if (!x && !y) {
          CHECK(value == 21);
        } else {
          CHECK(value == 7);
        }
      }
    }
  }
}

TEST_CASE("quadratic input passes through untouched") {
  VariableRegistry registry;
  PseudoBooleanPolynomial::TermMap terms;
  terms[{"x1", "x2"}] = 3;
  terms[{"x1"}] = -1;
  const auto f = pb(terms);
  const auto report = quboc::rosenberg_quadratize(f, registry);
  CHECK(report.output == f);
  CHECK(report.substitutions.empty());
  CHECK(registry.binary_variables().empty());
}

TEST_CASE("degree-4 monomial needs two substitutions") {
  VariableRegistry registry;
  const auto f = PseudoBooleanPolynomial::monomial({"x1", "x2", "x3", "x4"}, 1);
  const auto report = quboc::rosenberg_quadratize(f, registry);
  CHECK(report.substitutions.size() == 2);
  CHECK(report.output.degree() <= 2);
  CHECK(argmin_projection(report.output, {"x1", "x2", "x3", "x4"}) ==
        argmin_projection(f, {"x1", "x2", "x3", "x4"}));
}

TEST_CASE("negative monomial transform on the flipped cubic") {
  VariableRegistry registry;
  PseudoBooleanPolynomial::TermMap terms;
  terms[{"x1", "x2", "x3"}] = -36;
  const auto f = pb(terms);
  const auto report = quboc::negative_monomial_quadratize(f, registry);

  REQUIRE(report.locals.size() == 1);
  CHECK(report.locals[0].monomial ==
        std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(report.locals[0].coefficient == -36);
  const std::string aux = report.locals[0].aux;

  PseudoBooleanPolynomial::TermMap expected;
  expected[{aux}] = 72;
  expected[{"x1", aux}] = -36;
  expected[{"x2", aux}] = -36;
  expected[{"x3", aux}] = -36;
  CHECK(report.output == pb(expected));

  SUBCASE("minimizing over the auxiliary recovers the monomial") {
    for (const auto& xbits :
         testutil::enumerate_assignments({"x1", "x2", "x3"})) {
      Rational best;
      bool first = true;
      for (bool t : {false, true}) {
        Assignment full = xbits;
        full[aux] = t;
        const Rational value = report.output.evaluate(full);
        if (first || value < best) {
          best = value;
          first = false;
        }
      }
      CHECK(best == f.evaluate(xbits));
    }
  }
}

TEST_CASE("negative monomial transform rejects positive high-degree terms") {
  VariableRegistry registry;
  const auto f = PseudoBooleanPolynomial::monomial({"x1", "x2", "x3"}, 2);
  CHECK_THROWS_AS(quboc::negative_monomial_quadratize(f, registry),
                  quboc::CompileError);

  const auto quadratic = PseudoBooleanPolynomial::monomial({"x1", "x2"}, 5);
  const auto report = quboc::negative_monomial_quadratize(quadratic, registry);
  CHECK(report.output == quadratic);
  CHECK(report.locals.empty());
}

TEST_CASE("hybrid uses only the local transform on all-negative cubics") {
  PseudoBooleanPolynomial::TermMap terms;
  terms[{}] = 9;
  terms[{"x1"}] = -13;
  terms[{"x2"}] = -14;
  terms[{"x3"}] = -9;
  terms[{"x1", "x2"}] = 18;
  terms[{"x1", "x3"}] = 18;
  terms[{"x2", "x3"}] = 18;
  terms[{"x1", "x2", "x3"}] = -36;
  const auto flipped = pb(terms);

  VariableRegistry registry;
  const auto report =
      quboc::quadratize(flipped, QuadratizationStrategy::Hybrid, registry);
  CHECK(report.substitutions.empty());
  CHECK(report.locals.size() == 1);
  CHECK(report.output.degree() <= 2);

  const std::vector<std::string> originals = {"x1", "x2", "x3"};
  CHECK(argmin_projection(report.output, originals) ==
        argmin_projection(flipped, originals));
}

TEST_CASE("hybrid splits mixed-sign high-degree terms") {
  PseudoBooleanPolynomial::TermMap terms;
  terms[{"x1", "x2", "x3"}] = 5;
  terms[{"x2", "x3", "x4"}] = -4;
  terms[{"x1"}] = 1;
  const auto f = pb(terms);

  VariableRegistry registry;
  const auto report =
      quboc::quadratize(f, QuadratizationStrategy::Hybrid, registry);
  CHECK(report.locals.size() == 1);
  CHECK(report.substitutions.size() == 1);
  CHECK(report.output.degree() <= 2);

  const std::vector<std::string> originals = {"x1", "x2", "x3", "x4"};
  CHECK(argmin_projection(report.output, originals) ==
        argmin_projection(f, originals));
}

TEST_CASE("strategy dispatch handles trivial inputs") {
  VariableRegistry registry;
  const auto constant = PseudoBooleanPolynomial::constant(3);
  for (const auto strategy :
       {QuadratizationStrategy::Rosenberg, QuadratizationStrategy::Local,
        QuadratizationStrategy::Hybrid}) {
    const auto report = quboc::quadratize(constant, strategy, registry);
    CHECK(report.output == constant);
    CHECK(report.substitutions.empty());
    CHECK(report.locals.empty());
  }
}

TEST_CASE("both strategies preserve projected argmin sets on random inputs") {
  auto rng = testutil::make_rng(20260815);
  const auto names = testutil::var_names(5);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = testutil::random_pb_polynomial(rng, names, 4, 9);
    if (f.degree() < 3) continue;
    ++checked;
    const auto expected = argmin_projection(f, names);

    VariableRegistry rosenberg_registry;
    const auto rosenberg = quboc::quadratize(
        f, QuadratizationStrategy::Rosenberg, rosenberg_registry);
    CHECK(rosenberg.output.degree() <= 2);
    CHECK(argmin_projection(rosenberg.output, names) == expected);

    VariableRegistry hybrid_registry;
    const auto hybrid =
        quboc::quadratize(f, QuadratizationStrategy::Hybrid, hybrid_registry);
    CHECK(hybrid.output.degree() <= 2);
    CHECK(argmin_projection(hybrid.output, names) == expected);
  }
  CHECK(checked >= 20);
}

TEST_CASE("auxiliaries appear exactly once per report") {
  auto rng = testutil::make_rng(13);
  const auto names = testutil::var_names(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = testutil::random_pb_polynomial(rng, names, 4, 9);
    VariableRegistry registry;
    const auto report =
        quboc::quadratize(f, QuadratizationStrategy::Hybrid, registry);
    std::set<std::string> seen;
    for (const auto& sub : report.substitutions) {
      CHECK(seen.insert(sub.aux).second);
    }
    for (const auto& local : report.locals) {
      CHECK(seen.insert(local.aux).second);
    }
    CHECK(seen == registry.auxiliary_variables());
  }
}
