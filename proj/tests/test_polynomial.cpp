#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "quboc/errors.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/rational.hpp"
#include "testutil.hpp"

using quboc::Assignment;
using quboc::BigInt;
using quboc::IntegerPolynomial;
using quboc::PseudoBooleanPolynomial;
using quboc::Rational;

namespace {

PseudoBooleanPolynomial var(const std::string& name) {
  return PseudoBooleanPolynomial::variable(name);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(quboc::to_string(quboc::rational_from_string("3/6")) == "1/2");
  CHECK(quboc::to_string(quboc::rational_from_string("-18")) == "-18");
  CHECK(quboc::rational_from_string("-1.25") == Rational(-5, 4));
  CHECK(quboc::rational_from_string("0.5") == Rational(1, 2));
  CHECK(quboc::rational_from_string(" 7 ") == 7);
  CHECK(quboc::rational_from_string("-3/4") == Rational(-3, 4));
  CHECK_THROWS_AS(quboc::rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(quboc::rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(quboc::rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(quboc::rational_from_string("1.2.3"), std::invalid_argument);
  CHECK(quboc::is_integer(Rational(4, 2)));
  CHECK_FALSE(quboc::is_integer(Rational(1, 2)));
  CHECK(quboc::rational_floor(Rational(-3, 2)) == -2);
  CHECK(quboc::rational_ceil(Rational(-3, 2)) == -1);
  CHECK(quboc::rational_floor(Rational(3, 2)) == 1);
  CHECK(quboc::rational_ceil(Rational(3, 2)) == 2);
  CHECK(quboc::rational_floor(Rational(4)) == 4);
  CHECK(quboc::rational_ceil(Rational(4)) == 4);
}

TEST_CASE("constructors normalize terms") {
  const auto p = PseudoBooleanPolynomial::monomial({"x2", "x1", "x2"}, 3);
  REQUIRE(p.term_count() == 1);
  CHECK(p.coefficient({"x1", "x2"}) == 3);
  CHECK(p.degree() == 2);

  PseudoBooleanPolynomial::TermMap raw;
  raw[{"x3", "x1"}] = 2;
  raw[{}] = -1;
  const auto q = PseudoBooleanPolynomial::from_terms(raw);
  CHECK(q.coefficient({"x1", "x3"}) == 2);
  CHECK(q.constant_term() == -1);

  CHECK(PseudoBooleanPolynomial::constant(0).is_zero());
  CHECK(PseudoBooleanPolynomial::monomial({"x1"}, 0).is_zero());
}

TEST_CASE("arithmetic identities on fixed polynomials") {
  const auto x1 = var("x1");
  const auto x2 = var("x2");

  SUBCASE("squared difference of two bits") {
    const auto diff = x1 - x2;
    const auto sq = diff * diff;
    PseudoBooleanPolynomial::TermMap expected;
    expected[{"x1"}] = 1;
    expected[{"x2"}] = 1;
    expected[{"x1", "x2"}] = -2;
    CHECK(sq == PseudoBooleanPolynomial::from_terms(expected));
  }

  SUBCASE("idempotent squares") {
    const auto p = x1 * Rational(5) + PseudoBooleanPolynomial::constant(2);
    CHECK(x1 * x1 == x1);
    CHECK((p * p).degree() == 1);
  }

  SUBCASE("cancellation removes terms") {
    const auto p = x1 * x2 - x1 * x2;
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
  }

  SUBCASE("negation") {
    const auto p = x1 * Rational(3) - x2;
    const auto n = -p;
    CHECK(n.coefficient({"x1"}) == -3);
    CHECK(n.coefficient({"x2"}) == 1);
    CHECK((p + n).is_zero());
  }
}

TEST_CASE("ring laws hold on random polynomials") {
  auto rng = testutil::make_rng(20260823);
  const auto names = testutil::var_names(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testutil::random_pb_polynomial(rng, names, 3, 5);
    const auto b = testutil::random_pb_polynomial(rng, names, 3, 5);
    const auto c = testutil::random_pb_polynomial(rng, names, 3, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a - a == PseudoBooleanPolynomial());
  }
}

TEST_CASE("multiplication agrees with pointwise products") {
  auto rng = testutil::make_rng(7);
  const auto names = testutil::var_names(4);
  const auto points = testutil::enumerate_assignments(names);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = testutil::random_pb_polynomial(rng, names, 4, 4);
    const auto b = testutil::random_pb_polynomial(rng, names, 4, 4);
    const auto ab = a * b;
    for (const auto& point : points) {
      CHECK(ab.evaluate(point) == a.evaluate(point) * b.evaluate(point));
    }
  }
}

TEST_CASE("substitution replaces a variable everywhere") {
  const auto x1 = var("x1");
  const auto x2 = var("x2");
  const auto x3 = var("x3");

  const auto f = x1 + x1 * x2 * Rational(2);
  const auto g = f.substitute("x1", PseudoBooleanPolynomial::constant(1) - x3);

  PseudoBooleanPolynomial::TermMap expected;
  expected[{}] = 1;
  expected[{"x3"}] = -1;
  expected[{"x2"}] = 2;
  expected[{"x2", "x3"}] = -2;
  CHECK(g == PseudoBooleanPolynomial::from_terms(expected));

  SUBCASE("substituting an absent variable is a no-op") {
    CHECK(f.substitute("x9", x3) == f);
  }

  SUBCASE("substitution with a constant fixes the variable") {
    const auto fixed = f.substitute("x1", PseudoBooleanPolynomial::constant(1));
    CHECK(fixed.coefficient({}) == 1);
    CHECK(fixed.coefficient({"x2"}) == 2);
  }
}

TEST_CASE("substitution matches evaluation on random instances") {
  auto rng = testutil::make_rng(99);
  const auto names = testutil::var_names(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = testutil::random_pb_polynomial(rng, names, 3, 5);
    const auto g = testutil::random_pb_polynomial(rng, {"x2", "x3", "x4"}, 2, 3);
    const auto h = f.substitute("x1", g);
    for (const auto& point :
         testutil::enumerate_assignments({"x2", "x3", "x4"})) {
      const Rational gv = g.evaluate(point);
      if (gv != 0 && gv != 1) continue;
      Assignment full = point;
      full["x1"] = gv == 1;
      CHECK(h.evaluate(point) == f.evaluate(full));
    }
  }
}

TEST_CASE("evaluate requires full coverage") {
  const auto f = var("x1") * var("x2");
  Assignment partial;
  partial["x1"] = true;
  CHECK_THROWS_AS(f.evaluate(partial), quboc::MissingVariableError);
  try {
    f.evaluate(partial);
  } catch (const quboc::MissingVariableError& e) {
    CHECK(e.variable() == "x2");
  }
}

TEST_CASE("bounds are sound and tight in sign-separable cases") {
  auto rng = testutil::make_rng(1234);
  const auto names = testutil::var_names(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = testutil::random_pb_polynomial(rng, names, 4, 6);
    Rational lo;
    Rational hi;
    bool first = true;
    for (const auto& point : testutil::enumerate_assignments(names)) {
      const Rational value = f.evaluate(point);
      if (first) {
        lo = hi = value;
        first = false;
      } else {
        lo = std::min(lo, value);
        hi = std::max(hi, value);
      }
    }
    CHECK(f.lower_bound() <= lo);
    CHECK(f.upper_bound() >= hi);
  }

  SUBCASE("linear polynomials reach both bounds") {
    const auto f = var("x1") * Rational(3) - var("x2") * Rational(4) +
                   PseudoBooleanPolynomial::constant(2);
    CHECK(f.lower_bound() == -2);
    CHECK(f.upper_bound() == 5);
    const auto brute = testutil::brute_min(f);
    CHECK(brute.minimum == f.lower_bound());
  }
}

TEST_CASE("degree and variables") {
  const auto f = var("x1") * var("x2") * var("x3") - var("x2") +
                 PseudoBooleanPolynomial::constant(7);
  CHECK(f.degree() == 3);
  CHECK(f.variables() == std::set<std::string>{"x1", "x2", "x3"});
  CHECK(PseudoBooleanPolynomial::constant(5).degree() == 0);
  CHECK(PseudoBooleanPolynomial().degree() == 0);
}

TEST_CASE("string rendering orders by degree then name") {
  PseudoBooleanPolynomial::TermMap terms;
  terms[{}] = -9;
  terms[{"x1"}] = 13;
  terms[{"x2"}] = 14;
  terms[{"x10"}] = 1;
  terms[{"x1", "x2"}] = -18;
  const auto f = PseudoBooleanPolynomial::from_terms(terms);
  CHECK(f.to_string() == "-9 + 13*x1 + 14*x2 + x10 - 18*x1*x2");
  CHECK(PseudoBooleanPolynomial().to_string() == "0");
  CHECK(PseudoBooleanPolynomial::constant(Rational(1, 2)).to_string() == "1/2");
}

TEST_CASE("integer polynomial arithmetic and evaluation") {
  const auto z1 = IntegerPolynomial::variable("z1");
  const auto z2 = IntegerPolynomial::variable("z2");
  const auto f = z1 * z1 - z2 * Rational(2) + IntegerPolynomial::constant(3);
  CHECK(f.degree() == 2);
  CHECK(f.variables() == std::set<std::string>{"z1", "z2"});

  std::map<std::string, BigInt> point;
  point["z1"] = -3;
  point["z2"] = 5;
  CHECK(f.evaluate(point) == 9 - 10 + 3);

  std::map<std::string, BigInt> missing;
  missing["z1"] = 0;
  CHECK_THROWS_AS(f.evaluate(missing), quboc::MissingVariableError);

  const auto g = (z1 + z2) * (z1 - z2);
  std::map<std::string, BigInt> p2;
  p2["z1"] = 4;
  p2["z2"] = 7;
  CHECK(g.evaluate(p2) == 16 - 49);
  CHECK(g == z1 * z1 - z2 * z2);
}

TEST_CASE("integer polynomial binarization expands powers multilinearly") {
  const auto z = IntegerPolynomial::variable("z");
  const auto f = z * z;
  std::map<std::string, PseudoBooleanPolynomial> decoders;
  decoders["z"] = var("x1") + var("x2") * Rational(2);
  const auto pb = f.substitute_binary(decoders);

  PseudoBooleanPolynomial::TermMap expected;
  expected[{"x1"}] = 1;
  expected[{"x2"}] = 4;
  expected[{"x1", "x2"}] = 4;
  CHECK(pb == PseudoBooleanPolynomial::from_terms(expected));

  std::map<std::string, PseudoBooleanPolynomial> empty;
  CHECK_THROWS_AS(f.substitute_binary(empty), quboc::MissingVariableError);
}

TEST_CASE("integer polynomial rendering") {
  const auto z = IntegerPolynomial::variable("z");
  const auto f = z * z * Rational(3) - z + IntegerPolynomial::constant(1);
  CHECK(f.to_string() == "1 - z + 3*z^2");
}
