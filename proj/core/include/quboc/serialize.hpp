#pragma once

#include <string>

#include "quboc/ising.hpp"
#include "quboc/pipeline.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/qaoa.hpp"
#include "quboc/sa_sampler.hpp"

namespace quboc {

/// JSON renderers. Every document is self-contained, carries format_version
/// and a type tag, ends with a newline, and prints byte-identically for
/// equal inputs. Exact quantities (coefficients, energies, bounds) are
/// rational strings; angles are doubles.

std::string polynomial_to_json_text(const PseudoBooleanPolynomial& f);
std::string qubo_to_json_text(const QuboModel& model);
std::string ising_to_json_text(const IsingModel& model);
std::string ising_polynomial_to_json_text(const IsingPolynomial& hp);
std::string circuit_to_json_text(const GateCircuit& circuit);
std::string samples_to_json_text(const SampleSet& set);

/// Every stage of a compilation: problem, registry, objective, penalties,
/// assembled polynomial, quadratization, QUBO, Ising, spin Hamiltonian,
/// flags, tool version.
std::string compile_output_to_json_text(const CompileOutput& output);

/// Solver outcome with decoded problem-level records.
std::string solve_report_to_json_text(const SolveReport& report,
                                      const CompileOutput& output);

/// Aligned text table of the decoded records, lowest energy first: one
/// column per declared problem variable, then energy, occurrences, feasible.
std::string solve_report_table(const SolveReport& report,
                               const CompileOutput& output);

}  // namespace quboc
