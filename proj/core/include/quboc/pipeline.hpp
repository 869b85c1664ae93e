#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quboc/ising.hpp"
#include "quboc/penalty.hpp"
#include "quboc/problem.hpp"
#include "quboc/qaoa.hpp"
#include "quboc/quadratize.hpp"
#include "quboc/registry.hpp"
#include "quboc/sa_sampler.hpp"

namespace quboc {

struct CompileFlags {
  QuadratizationStrategy strategy = QuadratizationStrategy::Rosenberg;
  /// Shared weight for constraint penalties and pair-substitution gadgets.
  /// Absent: each is derived from the polynomial it protects.
  std::optional<Rational> penalty;

  bool operator==(const CompileFlags& other) const = default;
};

/// Every intermediate stage of the lowering. Each stage is derived from the
/// one before it: registry/objective from the spec, penalized from the
/// objective and constraints, the quadratization from the penalized
/// polynomial, the matrices from the quadratic polynomial.
struct CompileOutput {
  ProblemSpec problem;
  VariableRegistry registry;
  /// Objective over binary variables, minimization sense (a max objective
  /// arrives here negated).
  PseudoBooleanPolynomial objective;
  PenalizedProblem penalized;
  /// Binary order before quadratization auxiliaries; qubit order of
  /// `hamiltonian`.
  std::vector<std::string> logical_variables;
  QuadratizationReport quadratization;
  QuboModel qubo;
  IsingModel ising;
  /// Spin form of the penalized polynomial. Degree > 2 terms stay intact;
  /// the gate-based backend splits them into CNOT ladders directly, so no
  /// auxiliary qubits are spent on them.
  IsingPolynomial hamiltonian;
  CompileFlags flags;
  std::string tool_version;
};

/// Lowers a validated problem end to end:
/// declarations -> binary encodings -> binary objective -> penalty assembly
/// -> quadratization -> QUBO -> Ising -> spin Hamiltonian.
/// Structural defects raise ParseError; lowering defects raise CompileError
/// tagged with the failing stage.
CompileOutput compile(const ProblemSpec& spec, const CompileFlags& flags = {});

enum class SolveBackend { Annealer, Qaoa, BruteForce };

struct SolveFlags {
  SolveBackend backend = SolveBackend::Annealer;
  std::uint64_t seed = 0;
  /// Annealer restarts.
  std::uint64_t reads = 1000;
  AnnealSchedule schedule;
  /// QAOA: circuit depth p, optimizer evaluation budget, measurement shots.
  std::size_t layers = 2;
  std::uint64_t budget = 200;
  std::uint64_t shots = 1000;
};

struct QaoaSummary {
  QaoaParams params;
  /// Exact expectation at the returned parameters.
  double expectation = 0.0;
};

struct SolveReport {
  SolveBackend backend = SolveBackend::Annealer;
  SampleSet samples;
  /// Problem-level view of `samples`: decoded values, feasibility, exact
  /// energies, in the sample set's record order.
  std::vector<DecodedSample> decoded;
  std::optional<QaoaSummary> qaoa;
};

/// Runs one backend against a compiled problem.
/// - Annealer: simulated annealing on the Ising model (all bits, gadget
///   auxiliaries included).
/// - Qaoa: seeded random start, Nelder-Mead over exact expectations, then
///   `shots` measurements of the tuned circuit on the logical qubits.
/// - BruteForce: exact enumeration of the penalized polynomial; reports the
///   optimum set only.
SolveReport run_solve(const CompileOutput& output, const SolveFlags& flags = {});

}  // namespace quboc
