#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quboc/ising.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/sa_sampler.hpp"

namespace quboc {

struct Gate {
  enum class Kind { H, RZ, RX, CNOT };

  Kind kind = Kind::H;
  std::size_t qubit = 0;
  /// Control index, meaningful for CNOT only.
  std::size_t control = 0;
  /// Rotation angle in radians, meaningful for RZ and RX only.
  double angle = 0.0;

  static Gate h(std::size_t qubit) { return {Kind::H, qubit, 0, 0.0}; }
  static Gate rz(std::size_t qubit, double angle) {
    return {Kind::RZ, qubit, 0, angle};
  }
  static Gate rx(std::size_t qubit, double angle) {
    return {Kind::RX, qubit, 0, angle};
  }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {Kind::CNOT, target, control, 0.0};
  }

  bool operator==(const Gate& other) const = default;
};

struct GateCircuit {
  std::size_t qubit_count = 0;
  std::vector<Gate> gates;

  bool operator==(const GateCircuit& other) const = default;
};

/// Throws CompileError when a gate references a qubit >= qubit_count, a
/// CNOT's control equals its target, or an angle is not finite.
void validate_circuit(const GateCircuit& circuit);

/// Amplitudes over basis index w, where bit j of w holds the value of
/// variable j. Basis labels print bit 0 (the first variable) leftmost.
struct StateVector {
  std::size_t qubit_count = 0;
  std::vector<std::complex<double>> amplitudes;

  double norm_squared() const;
  double probability(std::uint64_t index) const;
};

/// Basis label for index w with bit 0 leftmost, e.g. index 4 over 3 qubits
/// is "001".
std::string basis_label(std::uint64_t index, std::size_t qubits);

struct QaoaParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  std::size_t depth() const { return gamma.size(); }
  bool operator==(const QaoaParams& other) const = default;
};

/// One phase-separation layer e^{-i gamma (f_spin - constant)}: terms in
/// ascending (size, index) order; a singleton {j} becomes RZ(2 gamma a) on
/// qubit j, a larger term becomes an ascending CNOT ladder over its sorted
/// qubits, RZ(2 gamma a) on the last, and the ladder reversed. The constant
/// coefficient is a global phase and emits no gates.
GateCircuit synthesize_phase_circuit(const IsingPolynomial& hp, double gamma);

/// Phase layer with an explicit term emission order (every nonempty term
/// exactly once). All orders produce the same unitary; the default order is
/// the canonical one above.
GateCircuit synthesize_phase_circuit(
    const IsingPolynomial& hp, double gamma,
    const std::vector<IsingPolynomial::Key>& term_order);

/// Mixer layer: RX(2 beta) on every qubit.
GateCircuit synthesize_mixer(std::size_t qubits, double beta);

/// Full ansatz: H on every qubit, then per layer k the phase circuit for
/// gamma_k followed by the mixer for beta_k.
GateCircuit build_ansatz(const IsingPolynomial& hp, const QaoaParams& params);
GateCircuit build_ansatz(const IsingPolynomial& hp, const QaoaParams& params,
                         std::size_t qubits);

/// Applies the circuit's gates in order to an existing state.
void apply_circuit(const GateCircuit& circuit, StateVector& state);

/// Runs the circuit on |0...0> (dense simulation, guard: 24 qubits).
/// Throws BackendError when the final norm drifts from 1 by 1e-9 or more.
StateVector simulate(const GateCircuit& circuit);

/// Objective value per basis index, f(w) for w in [0, 2^n).
std::vector<double> energy_table(const IsingPolynomial& hp);
std::vector<double> energy_table(const PseudoBooleanPolynomial& f,
                                 const std::vector<std::string>& order);

/// Exact expectation sum_w |a_w|^2 f(w).
double expectation(const StateVector& state,
                   const std::vector<double>& energies);
double expectation(const StateVector& state, const IsingPolynomial& hp);

/// Multinomial measurement: `shots` draws from |a_w|^2, deterministic for a
/// given seed, aggregated with exact energies from f at each outcome.
SampleSet sample_counts(const StateVector& state, std::uint64_t shots,
                        std::uint64_t seed,
                        const std::vector<std::string>& variables,
                        const PseudoBooleanPolynomial& f);

enum class ExpectationMode {
  /// Noiseless sum over amplitudes; deterministic.
  Exact,
  /// Mean energy of a seeded finite-shot measurement per evaluation.
  Sampled,
};

struct QaoaResult {
  QaoaParams params;
  double energy = 0.0;
  /// Every optimizer evaluation in order.
  std::vector<std::pair<QaoaParams, double>> trace;
};

/// Tunes (gamma, beta) by Nelder-Mead under an evaluation budget, starting
/// from `initial`. Exact mode is fully deterministic; sampled mode draws
/// `shots` measurements per evaluation from a stream derived from (seed,
/// evaluation index). Returns the best parameters ever evaluated.
QaoaResult optimize_params(const IsingPolynomial& hp,
                           const QaoaParams& initial, std::uint64_t budget,
                           ExpectationMode mode = ExpectationMode::Exact,
                           std::uint64_t shots = 1000, std::uint64_t seed = 0,
                           double step = 0.25);

/// OpenQASM-flavored listing, one gate per line, e.g. `rz(-4.0) q[0];` and
/// `cx q[0],q[1];`.
std::string circuit_to_text(const GateCircuit& circuit);

}  // namespace quboc
