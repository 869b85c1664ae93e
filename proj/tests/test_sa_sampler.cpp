#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quboc/encoding.hpp"
#include "quboc/errors.hpp"
#include "quboc/ising.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/quadratize.hpp"
#include "quboc/registry.hpp"
#include "quboc/sa_sampler.hpp"
#include "testutil.hpp"

using quboc::AnnealSchedule;
using quboc::Assignment;
using quboc::BackendError;
using quboc::IsingModel;
using quboc::PseudoBooleanPolynomial;
using quboc::QuboModel;
using quboc::Rational;
using quboc::SampleSet;
using quboc::VariableRegistry;

namespace {

PseudoBooleanPolynomial pb(const PseudoBooleanPolynomial::TermMap& terms) {
  return PseudoBooleanPolynomial::from_terms(terms);
}

/// z^3 - 6z over z in [-3, 3], binarized with z = -3 + x1 + 2*x2 + 3*x3.
PseudoBooleanPolynomial binarized_cubic() {
  PseudoBooleanPolynomial::TermMap terms;
  terms[{}] = -9;
  terms[{"x1"}] = 13;
  terms[{"x2"}] = 14;
  terms[{"x3"}] = 9;
  terms[{"x1", "x2"}] = -18;
  terms[{"x1", "x3"}] = -18;
  terms[{"x2", "x3"}] = -18;
  terms[{"x1", "x2", "x3"}] = 36;
  return pb(terms);
}

/// Quadratized three-clause MAX-SAT objective with P=7 and aux z1 = x2*x3.
PseudoBooleanPolynomial maxsat_qubo_poly() {
  VariableRegistry registry;
  const std::vector<quboc::Clause> clauses{{1, -2, 3}, {1, 2, -3}, {-1, -2, 3}};
  const auto objective = quboc::maxsat_objective(clauses);
  const auto report =
      quboc::rosenberg_quadratize(objective, registry, Rational(7));
  REQUIRE(report.output.degree() <= 2);
  return report.output;
}

Assignment bits4(bool x1, bool x2, bool x3, bool z1) {
  return Assignment{{"x1", x1}, {"x2", x2}, {"x3", x3}, {"z1", z1}};
}

IsingModel random_ising(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  IsingModel model;
  model.variables = testutil::var_names(n);
  model.J.assign(n, std::vector<Rational>(n, 0));
  model.h.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    model.h[j] = coef(rng);
    for (std::size_t k = j + 1; k < n; ++k) {
      const Rational value = coef(rng);
      model.J[j][k] = value;
      model.J[k][j] = value;
    }
  }
  model.offset = coef(rng);
  return model;
}

}  // namespace

TEST_CASE("sample sets merge duplicate assignments and sort records") {
  SampleSet set;
  set.insert(Assignment{{"x1", true}}, Rational(3), 2);
  set.insert(Assignment{{"x1", false}}, Rational(-1), 5);
  set.insert(Assignment{{"x1", true}}, Rational(3), 4);

  CHECK(set.total_reads() == 11);
  const auto records = set.records();
  REQUIRE(records.size() == 2);
  CHECK(records[0].energy == -1);
  CHECK(records[0].occurrences == 5);
  CHECK(records[1].energy == 3);
  CHECK(records[1].occurrences == 6);
  CHECK(set.min_energy() == -1);
  CHECK(set.reads_at_min() == 5);

  CHECK_THROWS_AS(set.insert(Assignment{{"x1", true}}, Rational(4)),
                  BackendError);
  CHECK_THROWS_AS(SampleSet{}.min_energy(), BackendError);
}

TEST_CASE("equal energies are ordered by assignment") {
  SampleSet set;
  set.insert(Assignment{{"x1", true}, {"x2", false}}, Rational(0));
  set.insert(Assignment{{"x1", false}, {"x2", true}}, Rational(0));
  const auto records = set.records();
  REQUIRE(records.size() == 2);
  CHECK_FALSE(records[0].assignment.at("x1"));
  CHECK(records[1].assignment.at("x1"));
}

TEST_CASE("brute force reproduces the binarized cubic spectrum") {
  const auto f = binarized_cubic();
  const auto set = quboc::brute_force(f);

  CHECK(set.total_reads() == 8);
  const auto records = set.records();
  REQUIRE(records.size() == 8);
  const std::vector<int> expected{-9, -5, -4, 0, 0, 4, 5, 9};
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].energy == expected[i]);
    CHECK(records[i].occurrences == 1);
  }
  CHECK(records[0].assignment ==
        Assignment{{"x1", false}, {"x2", false}, {"x3", false}});

  const auto minimizers = quboc::brute_force(f, true);
  CHECK(minimizers.total_reads() == 1);
  CHECK(minimizers.min_energy() == -9);
}

TEST_CASE("brute force lists every zero of the quadratized MAX-SAT objective") {
  const auto f = maxsat_qubo_poly();
  const auto minimizers = quboc::brute_force(f, true);

  CHECK(minimizers.min_energy() == 0);
  const auto records = minimizers.records();
  // Five satisfying assignments of the clause set, each lifted with z1 = x2*x3.
  REQUIRE(records.size() == 5);
  const std::vector<Assignment> expected{
      bits4(false, false, false, false), bits4(false, true, true, true),
      bits4(true, false, false, false),  bits4(true, false, true, false),
      bits4(true, true, true, true)};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(records[i].assignment == expected[i]);
  }

  const auto spectrum = quboc::brute_force(f);
  CHECK(spectrum.total_reads() == 16);
  for (const auto& record : spectrum.records()) {
    CHECK(record.energy == f.evaluate(record.assignment));
    CHECK(record.energy >= 0);
  }
}

TEST_CASE("constant models tie every assignment") {
  QuboModel qubo;
  qubo.variables = {"x1", "x2"};
  qubo.Q = {{0, 0}, {0, 0}};
  qubo.constant = Rational(5, 2);

  const auto full = quboc::brute_force(qubo);
  CHECK(full.total_reads() == 4);
  const auto minimizers = quboc::brute_force(qubo, true);
  CHECK(minimizers.total_reads() == 4);
  for (const auto& record : minimizers.records()) {
    CHECK(record.energy == Rational(5, 2));
  }
}

TEST_CASE("brute force falls back to rationals for huge denominators") {
  const auto f = pb({{{"x1"}, Rational(1, quboc::BigInt(1) << 40)},
                     {{"x2"}, 1}});
  const auto records = quboc::brute_force(f).records();
  REQUIRE(records.size() == 4);
  CHECK(records[0].energy == 0);
  CHECK(records[1].energy == Rational(1, quboc::BigInt(1) << 40));
  CHECK(records[2].energy == 1);
  CHECK(records[3].energy ==
        Rational(1) + Rational(1, quboc::BigInt(1) << 40));
}

TEST_CASE("brute force rejects oversized inputs") {
  PseudoBooleanPolynomial big;
  for (const auto& name : testutil::var_names(25)) {
    big += PseudoBooleanPolynomial::monomial({name}, 1);
  }
  CHECK_THROWS_AS(quboc::brute_force(big), BackendError);
}

TEST_CASE("sampler validates schedule and read count") {
  IsingModel model;
  model.variables = {"x1"};
  model.J = {{0}};
  model.h = {1};
  model.offset = 0;

  CHECK_THROWS_AS(quboc::sample(model, 0, 1), BackendError);
  CHECK_THROWS_AS(quboc::sample(model, 1, 1, AnnealSchedule{0.0, 10.0, 256}),
                  BackendError);
  CHECK_THROWS_AS(quboc::sample(model, 1, 1, AnnealSchedule{5.0, 1.0, 256}),
                  BackendError);
  CHECK_THROWS_AS(quboc::sample(model, 1, 1, AnnealSchedule{0.1, 10.0, 0}),
                  BackendError);
}

TEST_CASE("single-field model lands every read at its ground state") {
  IsingModel model;
  model.variables = {"x1"};
  model.J = {{0}};
  model.h = {1};
  model.offset = 0;

  const auto set = quboc::sample(model, 50, 123);
  CHECK(set.total_reads() == 50);
  const auto records = set.records();
  REQUIRE(records.size() == 1);
  CHECK(records[0].energy == -1);
  CHECK(records[0].assignment.at("x1"));
  CHECK(records[0].occurrences == 50);
}

TEST_CASE("zero model spreads reads across all assignments") {
  IsingModel model;
  model.variables = {"x1", "x2"};
  model.J = {{0, 0}, {0, 0}};
  model.h = {0, 0};
  model.offset = Rational(7, 2);

  const auto set = quboc::sample(model, 400, 9);
  CHECK(set.total_reads() == 400);
  const auto records = set.records();
  CHECK(records.size() == 4);
  for (const auto& record : records) {
    CHECK(record.energy == Rational(7, 2));
    CHECK(record.occurrences >= 20);
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  auto rng = testutil::make_rng(77);
  const auto model = random_ising(rng, 6);
  const auto a = quboc::sample(model, 40, 4242);
  const auto b = quboc::sample(model, 40, 4242);
  const auto c = quboc::sample(model, 40, 4243);
  CHECK(a == b);
  CHECK(a.total_reads() == c.total_reads());
}

TEST_CASE("reported energies match independent model evaluation") {
  auto rng = testutil::make_rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const auto model = random_ising(rng, 5);
    const auto set = quboc::sample(model, 30, 100 + trial);
    for (const auto& record : set.records()) {
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < model.variables.size(); ++j) {
        if (record.assignment.at(model.variables[j])) {
          mask |= std::uint64_t{1} << j;
        }
      }
      CHECK(record.energy == model.value_at_bits(mask));
    }
  }
}

TEST_CASE("annealer finds brute-force minimum on most random models") {
  auto rng = testutil::make_rng(5150);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  int hits = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    const auto model = random_ising(rng, size(rng));
    const auto exact = quboc::brute_force(model, true);
    const auto sampled = quboc::sample(model, 20, 9000 + trial);
    CHECK(sampled.min_energy() >= exact.min_energy());
    if (sampled.min_energy() == exact.min_energy()) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_CASE("annealer dominates the quadratized MAX-SAT zero set") {
  const auto f = maxsat_qubo_poly();
  const auto qubo = quboc::qubo_from_polynomial(f);
  const auto ising = quboc::qubo_to_ising(qubo);

  const std::set<Assignment> zeros{
      bits4(false, false, false, false), bits4(false, true, true, true),
      bits4(true, false, false, false),  bits4(true, false, true, false),
      bits4(true, true, true, true)};

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto set = quboc::sample(ising, 1000, seed);
    CHECK(set.total_reads() == 1000);
    CHECK(set.min_energy() == 0);
    CHECK(set.reads_at_min() >= 900);
    std::set<Assignment> seen;
    for (const auto& record : set.records()) {
      if (record.energy == 0) seen.insert(record.assignment);
    }
    CHECK(seen == zeros);
  }
}

TEST_CASE("brute force agrees across polynomial, QUBO, and Ising forms") {
  auto rng = testutil::make_rng(808);
  for (int trial = 0; trial < 10; ++trial) {
    const auto model = random_ising(rng, 4);
    const auto qubo = quboc::ising_to_qubo(model);
    const auto from_ising = quboc::brute_force(model);
    const auto from_qubo = quboc::brute_force(qubo);
    CHECK(from_ising == from_qubo);
  }
}

TEST_CASE("decoding maps bits back to integer values") {
  VariableRegistry registry;
  const auto encoding = quboc::encode_integer("z", -3, 3, registry);
  CHECK(encoding.bits == std::vector<std::string>{"x1", "x2", "x3"});

  const auto set = quboc::brute_force(binarized_cubic());
  const auto decoded = quboc::decode_samples(set, registry);
  REQUIRE(decoded.size() == 8);
  CHECK(decoded[0].energy == -9);
  CHECK(decoded[0].values.integers.at("z") == -3);
  CHECK(decoded[0].feasible);
  CHECK(decoded[0].values.booleans.empty());
  for (const auto& sample : decoded) {
    CHECK(sample.values.encoding_valid);
    CHECK(sample.feasible);
  }
}

TEST_CASE("decoding flags penalty violations as infeasible") {
  VariableRegistry registry;
  registry.declare_bool("x1");
  registry.declare_bool("x2");
  const auto penalty = pb({{{"x1", "x2"}, 1}});

  SampleSet set;
  set.insert(Assignment{{"x1", true}, {"x2", true}}, Rational(2));
  set.insert(Assignment{{"x1", true}, {"x2", false}}, Rational(1));

  const auto decoded = quboc::decode_samples(set, registry, {penalty});
  REQUIRE(decoded.size() == 2);
  CHECK(decoded[0].feasible);
  CHECK(decoded[0].values.booleans.at("x1"));
  CHECK_FALSE(decoded[0].values.booleans.at("x2"));
  CHECK_FALSE(decoded[1].feasible);
}

TEST_CASE("decoding flags broken one-hot groups as infeasible") {
  VariableRegistry registry;
  quboc::encode_categorical("c", {"red", "green"}, registry);

  SampleSet set;
  set.insert(Assignment{{"c=red", true}, {"c=green", true}}, Rational(0));
  set.insert(Assignment{{"c=red", true}, {"c=green", false}}, Rational(0));

  const auto decoded = quboc::decode_samples(set, registry);
  REQUIRE(decoded.size() == 2);
  int feasible = 0;
  for (const auto& sample : decoded) {
    if (sample.feasible) {
      ++feasible;
      CHECK(sample.values.categories.at("c") == "red");
    }
  }
  CHECK(feasible == 1);
}
