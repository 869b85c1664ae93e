// Microbenchmarks for the hot paths: polynomial algebra, lowering stages,
// annealing sweeps, and statevector simulation. Inputs are seeded so runs
// are comparable across machines and revisions.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quboc/encoding.hpp"
#include "quboc/ising.hpp"
#include "quboc/pipeline.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/problem.hpp"
#include "quboc/qaoa.hpp"
#include "quboc/quadratize.hpp"
#include "quboc/registry.hpp"
#include "quboc/sa_sampler.hpp"

namespace {

using quboc::IntegerPolynomial;
using quboc::IsingModel;
using quboc::IsingPolynomial;
using quboc::PseudoBooleanPolynomial;
using quboc::Rational;
using quboc::VariableRegistry;

PseudoBooleanPolynomial random_polynomial(std::size_t variables,
                                          std::size_t max_degree,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coefficient(-9, 9);
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= variables; ++j) {
    names.push_back("x" + std::to_string(j));
  }
  PseudoBooleanPolynomial::TermMap terms;
  std::vector<std::size_t> combo;
  const std::function<void(std::size_t)> visit = [&](std::size_t start) {
    PseudoBooleanPolynomial::TermKey key;
    for (const auto j : combo) key.push_back(names[j]);
    const int value = coefficient(rng);
    if (value != 0) terms[key] = value;
    if (combo.size() == max_degree) return;
    for (std::size_t j = start; j < variables; ++j) {
      combo.push_back(j);
      visit(j + 1);
      combo.pop_back();
    }
  };
  visit(0);
  return PseudoBooleanPolynomial::from_terms(terms);
}

IsingModel random_ising(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(-9, 9);
  IsingModel model;
  for (std::size_t j = 0; j < n; ++j) {
    model.variables.push_back("s" + std::to_string(j + 1));
  }
  model.h.assign(n, 0);
  model.J.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    model.h[j] = weight(rng);
    for (std::size_t k = j + 1; k < n; ++k) {
      const Rational value = weight(rng);
      model.J[j][k] = value;
      model.J[k][j] = value;
    }
  }
  return model;
}

quboc::ProblemSpec knapsack_spec(int items) {
  std::mt19937_64 rng(7741);
  std::uniform_int_distribution<int> value(1, 9);
  quboc::ProblemSpec spec;
  spec.name = "bench-knapsack";
  spec.sense = quboc::Sense::Maximize;
  IntegerPolynomial profit;
  IntegerPolynomial weight = IntegerPolynomial::constant(-3 * items);
  for (int j = 1; j <= items; ++j) {
    const std::string name = "take_" + std::to_string(j);
    spec.variables.push_back(quboc::VariableDecl::boolean(name));
    profit += IntegerPolynomial::monomial({{name, 1}}, value(rng));
    weight += IntegerPolynomial::monomial({{name, 1}}, value(rng));
  }
  spec.objective = profit;
  spec.constraints.push_back({weight, quboc::Relation::AtMostZero});
  return spec;
}

void BM_polynomial_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PseudoBooleanPolynomial a = random_polynomial(n, 3, 11);
  const PseudoBooleanPolynomial b = random_polynomial(n, 3, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_polynomial_multiply)->Arg(4)->Arg(6)->Arg(8);

void BM_binarize_integer_objective(benchmark::State& state) {
  const auto span = state.range(0);
  const IntegerPolynomial objective =
      IntegerPolynomial::monomial({{"z", 3}}, 1) +
      IntegerPolynomial::monomial({{"z", 1}}, -6);
  for (auto _ : state) {
    VariableRegistry registry;
    const auto encoding = quboc::encode_integer("z", 0, span, registry);
    benchmark::DoNotOptimize(
        objective.substitute_binary({{"z", encoding.decode}}));
  }
}
BENCHMARK(BM_binarize_integer_objective)->Arg(7)->Arg(127)->Arg(1023);

void BM_rosenberg_quadratize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PseudoBooleanPolynomial f = random_polynomial(n, 4, 13);
  for (auto _ : state) {
    VariableRegistry registry;
    for (const auto& name : f.variables()) registry.declare_bool(name);
    benchmark::DoNotOptimize(quboc::quadratize(
        f, quboc::QuadratizationStrategy::Rosenberg, registry));
  }
}
BENCHMARK(BM_rosenberg_quadratize)->Arg(5)->Arg(7)->Arg(9);

void BM_qubo_to_ising(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PseudoBooleanPolynomial f = random_polynomial(n, 2, 14);
  const auto qubo = quboc::qubo_from_polynomial(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quboc::qubo_to_ising(qubo));
  }
}
BENCHMARK(BM_qubo_to_ising)->Arg(8)->Arg(16)->Arg(32);

void BM_annealer_reads(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IsingModel model = random_ising(n, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quboc::sample(model, 10, 1));
  }
}
BENCHMARK(BM_annealer_reads)->Arg(8)->Arg(16)->Arg(24);

void BM_statevector_ansatz(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PseudoBooleanPolynomial f = random_polynomial(n, 2, 16);
  std::vector<std::string> order;
  for (std::size_t j = 1; j <= n; ++j) {
    order.push_back("x" + std::to_string(j));
  }
  const IsingPolynomial hp = quboc::ising_polynomial_from_pb(f, order);
  const quboc::QaoaParams params{{0.3, -0.2}, {0.1, 0.4}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        quboc::simulate(quboc::build_ansatz(hp, params)));
  }
}
BENCHMARK(BM_statevector_ansatz)->Arg(6)->Arg(10)->Arg(14);

void BM_compile_knapsack(benchmark::State& state) {
  const auto items = static_cast<int>(state.range(0));
  const quboc::ProblemSpec spec = knapsack_spec(items);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quboc::compile(spec));
  }
}
BENCHMARK(BM_compile_knapsack)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
