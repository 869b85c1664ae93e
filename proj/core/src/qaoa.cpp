#include "quboc/qaoa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include "quboc/errors.hpp"
#include "quboc/nelder_mead.hpp"

namespace quboc {
namespace {

constexpr std::size_t kQubitGuard = 24;
constexpr double kNormTolerance = 1e-9;

std::vector<IsingPolynomial::Key> canonical_term_order(
    const IsingPolynomial& hp) {
  std::vector<IsingPolynomial::Key> order;
  for (const auto& [key, coefficient] : hp.terms()) {
    if (!key.empty()) order.push_back(key);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const IsingPolynomial::Key& a,
                      const IsingPolynomial::Key& b) {
                     return a.size() < b.size();
                   });
  return order;
}

std::string format_angle(double angle) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", angle);
  return buffer;
}

}  // namespace

void validate_circuit(const GateCircuit& circuit) {
  for (const Gate& gate : circuit.gates) {
    if (gate.qubit >= circuit.qubit_count) {
      throw CompileError("gate references qubit " + std::to_string(gate.qubit) +
                         " in a " + std::to_string(circuit.qubit_count) +
                         "-qubit circuit");
    }
    if (gate.kind == Gate::Kind::CNOT) {
      if (gate.control >= circuit.qubit_count) {
        throw CompileError("gate references qubit " +
                           std::to_string(gate.control) + " in a " +
                           std::to_string(circuit.qubit_count) +
                           "-qubit circuit");
      }
      if (gate.control == gate.qubit) {
        throw CompileError("cnot control equals its target, qubit " +
                           std::to_string(gate.qubit));
      }
    }
    if (!std::isfinite(gate.angle)) {
      throw CompileError("gate angle is not finite");
    }
  }
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& amplitude : amplitudes) total += std::norm(amplitude);
  return total;
}

double StateVector::probability(std::uint64_t index) const {
  if (index >= amplitudes.size()) {
    throw BackendError("basis index " + std::to_string(index) +
                       " out of range");
  }
  return std::norm(amplitudes[index]);
}

std::string basis_label(std::uint64_t index, std::size_t qubits) {
  std::string label(qubits, '0');
  for (std::size_t j = 0; j < qubits; ++j) {
    if ((index >> j) & 1) label[j] = '1';
  }
  return label;
}

GateCircuit synthesize_phase_circuit(const IsingPolynomial& hp, double gamma) {
  return synthesize_phase_circuit(hp, gamma, canonical_term_order(hp));
}

GateCircuit synthesize_phase_circuit(
    const IsingPolynomial& hp, double gamma,
    const std::vector<IsingPolynomial::Key>& term_order) {
  auto canonical = canonical_term_order(hp);
  auto supplied = term_order;
  std::sort(canonical.begin(), canonical.end());
  std::sort(supplied.begin(), supplied.end());
  if (canonical != supplied) {
    throw CompileError(
        "term order must list every nonempty term exactly once");
  }

  GateCircuit circuit;
  circuit.qubit_count = hp.qubit_count();
  for (const auto& key : term_order) {
    const double angle = 2.0 * gamma * to_double(hp.terms().at(key));
    if (key.size() == 1) {
      circuit.gates.push_back(Gate::rz(key[0], angle));
      continue;
    }
    for (std::size_t i = 0; i + 1 < key.size(); ++i) {
      circuit.gates.push_back(Gate::cnot(key[i], key[i + 1]));
    }
    circuit.gates.push_back(Gate::rz(key.back(), angle));
    for (std::size_t i = key.size() - 1; i-- > 0;) {
      circuit.gates.push_back(Gate::cnot(key[i], key[i + 1]));
    }
  }
  return circuit;
}

GateCircuit synthesize_mixer(std::size_t qubits, double beta) {
  GateCircuit circuit;
  circuit.qubit_count = qubits;
  for (std::size_t j = 0; j < qubits; ++j) {
    circuit.gates.push_back(Gate::rx(j, 2.0 * beta));
  }
  return circuit;
}

GateCircuit build_ansatz(const IsingPolynomial& hp, const QaoaParams& params) {
  return build_ansatz(hp, params, hp.qubit_count());
}

GateCircuit build_ansatz(const IsingPolynomial& hp, const QaoaParams& params,
                         std::size_t qubits) {
  if (params.gamma.size() != params.beta.size()) {
    throw CompileError("gamma and beta lengths differ: " +
                       std::to_string(params.gamma.size()) + " vs " +
                       std::to_string(params.beta.size()));
  }
  if (params.depth() < 1) {
    throw CompileError("ansatz depth must be at least 1");
  }
  if (qubits < hp.qubit_count()) {
    throw CompileError("ansatz spans " + std::to_string(qubits) +
                       " qubits but the Hamiltonian needs " +
                       std::to_string(hp.qubit_count()));
  }

  GateCircuit circuit;
  circuit.qubit_count = qubits;
  for (std::size_t j = 0; j < qubits; ++j) {
    circuit.gates.push_back(Gate::h(j));
  }
  for (std::size_t k = 0; k < params.depth(); ++k) {
    const GateCircuit phase = synthesize_phase_circuit(hp, params.gamma[k]);
    circuit.gates.insert(circuit.gates.end(), phase.gates.begin(),
                         phase.gates.end());
    const GateCircuit mixer = synthesize_mixer(qubits, params.beta[k]);
    circuit.gates.insert(circuit.gates.end(), mixer.gates.begin(),
                         mixer.gates.end());
  }
  return circuit;
}

void apply_circuit(const GateCircuit& circuit, StateVector& state) {
  validate_circuit(circuit);
  if (state.qubit_count != circuit.qubit_count ||
      state.amplitudes.size() != (std::size_t{1} << state.qubit_count)) {
    throw BackendError("state size does not match the circuit");
  }

  const std::uint64_t dim = std::uint64_t{1} << circuit.qubit_count;
  auto& a = state.amplitudes;
  for (const Gate& gate : circuit.gates) {
    const std::uint64_t target = std::uint64_t{1} << gate.qubit;
    switch (gate.kind) {
      case Gate::Kind::H: {
        const double scale = 1.0 / std::sqrt(2.0);
        for (std::uint64_t i = 0; i < dim; ++i) {
          if (i & target) continue;
          const auto low = a[i];
          const auto high = a[i | target];
          a[i] = scale * (low + high);
          a[i | target] = scale * (low - high);
        }
        break;
      }
      case Gate::Kind::RZ: {
        const std::complex<double> low_phase =
            std::polar(1.0, -gate.angle / 2.0);
        const std::complex<double> high_phase =
            std::polar(1.0, gate.angle / 2.0);
        for (std::uint64_t i = 0; i < dim; ++i) {
          a[i] *= (i & target) ? high_phase : low_phase;
        }
        break;
      }
      case Gate::Kind::RX: {
        const double c = std::cos(gate.angle / 2.0);
        const std::complex<double> s(0.0, -std::sin(gate.angle / 2.0));
        for (std::uint64_t i = 0; i < dim; ++i) {
          if (i & target) continue;
          const auto low = a[i];
          const auto high = a[i | target];
          a[i] = c * low + s * high;
          a[i | target] = s * low + c * high;
        }
        break;
      }
      case Gate::Kind::CNOT: {
        const std::uint64_t control = std::uint64_t{1} << gate.control;
        for (std::uint64_t i = 0; i < dim; ++i) {
          if ((i & control) && !(i & target)) {
            std::swap(a[i], a[i | target]);
          }
        }
        break;
      }
    }
  }
}

StateVector simulate(const GateCircuit& circuit) {
  if (circuit.qubit_count > kQubitGuard) {
    throw BackendError("dense simulation limited to " +
                       std::to_string(kQubitGuard) + " qubits, got " +
                       std::to_string(circuit.qubit_count));
  }
  StateVector state;
  state.qubit_count = circuit.qubit_count;
  state.amplitudes.assign(std::size_t{1} << circuit.qubit_count, 0.0);
  state.amplitudes[0] = 1.0;
  apply_circuit(circuit, state);
  if (std::abs(state.norm_squared() - 1.0) >= kNormTolerance) {
    throw BackendError("state norm drifted beyond tolerance");
  }
  return state;
}

std::vector<double> energy_table(const IsingPolynomial& hp) {
  const std::uint64_t dim = std::uint64_t{1} << hp.qubit_count();
  std::vector<std::pair<std::uint64_t, double>> terms;
  for (const auto& [key, coefficient] : hp.terms()) {
    std::uint64_t mask = 0;
    for (const std::size_t j : key) mask |= std::uint64_t{1} << j;
    terms.emplace_back(mask, to_double(coefficient));
  }
  std::vector<double> energies(dim, 0.0);
  for (std::uint64_t w = 0; w < dim; ++w) {
    double total = 0.0;
    for (const auto& [mask, coefficient] : terms) {
      total += (std::popcount(w & mask) & 1) ? -coefficient : coefficient;
    }
    energies[w] = total;
  }
  return energies;
}

std::vector<double> energy_table(const PseudoBooleanPolynomial& f,
                                 const std::vector<std::string>& order) {
  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < order.size(); ++j) index.emplace(order[j], j);
  std::vector<std::pair<std::uint64_t, double>> terms;
  for (const auto& [key, coefficient] : f.terms()) {
    std::uint64_t mask = 0;
    for (const std::string& name : key) {
      const auto it = index.find(name);
      if (it == index.end()) throw MissingVariableError(name);
      mask |= std::uint64_t{1} << it->second;
    }
    terms.emplace_back(mask, to_double(coefficient));
  }
  const std::uint64_t dim = std::uint64_t{1} << order.size();
  std::vector<double> energies(dim, 0.0);
  for (std::uint64_t w = 0; w < dim; ++w) {
    double total = 0.0;
    for (const auto& [mask, coefficient] : terms) {
      if ((w & mask) == mask) total += coefficient;
    }
    energies[w] = total;
  }
  return energies;
}

double expectation(const StateVector& state,
                   const std::vector<double>& energies) {
  if (energies.size() != state.amplitudes.size()) {
    throw BackendError("energy table does not match the state dimension");
  }
  double total = 0.0;
  for (std::uint64_t w = 0; w < state.amplitudes.size(); ++w) {
    total += std::norm(state.amplitudes[w]) * energies[w];
  }
  return total;
}

double expectation(const StateVector& state, const IsingPolynomial& hp) {
  if (hp.qubit_count() != state.qubit_count) {
    throw BackendError("Hamiltonian does not match the state dimension");
  }
  return expectation(state, energy_table(hp));
}

namespace {

std::vector<std::uint64_t> draw_outcomes(const StateVector& state,
                                         std::uint64_t shots,
                                         std::mt19937_64& rng) {
  std::vector<double> cumulative(state.amplitudes.size());
  double running = 0.0;
  for (std::size_t w = 0; w < state.amplitudes.size(); ++w) {
    running += std::norm(state.amplitudes[w]);
    cumulative[w] = running;
  }
  cumulative.back() = std::max(cumulative.back(), 1.0);

  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<std::uint64_t> outcomes(shots);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = uniform(rng);
    outcomes[shot] = std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                     cumulative.begin();
  }
  return outcomes;
}

}  // namespace

SampleSet sample_counts(const StateVector& state, std::uint64_t shots,
                        std::uint64_t seed,
                        const std::vector<std::string>& variables,
                        const PseudoBooleanPolynomial& f) {
  if (variables.size() != state.qubit_count) {
    throw BackendError("variable list does not match the state dimension");
  }
  if (shots < 1) {
    throw BackendError("shots must be at least 1");
  }

  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const std::uint64_t w : draw_outcomes(state, shots, rng)) {
    ++counts[w];
  }

  SampleSet set;
  for (const auto& [w, occurrences] : counts) {
    Assignment assignment;
    for (std::size_t j = 0; j < variables.size(); ++j) {
      assignment[variables[j]] = (w >> j) & 1;
    }
    const Rational energy = f.evaluate(assignment);
    set.insert(std::move(assignment), energy, occurrences);
  }
  return set;
}

QaoaResult optimize_params(const IsingPolynomial& hp,
                           const QaoaParams& initial, std::uint64_t budget,
                           ExpectationMode mode, std::uint64_t shots,
                           std::uint64_t seed, double step) {
  if (initial.gamma.size() != initial.beta.size() || initial.depth() < 1) {
    throw CompileError("initial parameters need matching gamma/beta, depth >= 1");
  }
  if (budget < 1) {
    throw BackendError("optimization budget must be at least 1");
  }
  if (mode == ExpectationMode::Sampled && shots < 1) {
    throw BackendError("shots must be at least 1");
  }

  const std::size_t p = initial.depth();
  const std::vector<double> energies = energy_table(hp);

  const auto unpack = [p](const std::vector<double>& point) {
    QaoaParams params;
    params.gamma.assign(point.begin(), point.begin() + p);
    params.beta.assign(point.begin() + p, point.end());
    return params;
  };

  std::uint64_t evaluations = 0;
  const auto objective = [&](const std::vector<double>& point) {
    const QaoaParams params = unpack(point);
    const StateVector state = simulate(build_ansatz(hp, params));
    if (mode == ExpectationMode::Exact) {
      return expectation(state, energies);
    }
    std::seed_seq sequence{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(evaluations),
        static_cast<std::uint32_t>(evaluations >> 32)};
    std::mt19937_64 rng(sequence);
    ++evaluations;
    double total = 0.0;
    for (const std::uint64_t w : draw_outcomes(state, shots, rng)) {
      total += energies[w];
    }
    return total / static_cast<double>(shots);
  };

  std::vector<double> start = initial.gamma;
  start.insert(start.end(), initial.beta.begin(), initial.beta.end());
  const NelderMeadResult result =
      nelder_mead_minimize(objective, start, step, budget);

  QaoaResult out;
  out.params = unpack(result.point);
  out.energy = result.value;
  out.trace.reserve(result.trace.size());
  for (const auto& [point, value] : result.trace) {
    out.trace.emplace_back(unpack(point), value);
  }
  return out;
}

std::string circuit_to_text(const GateCircuit& circuit) {
  std::string text;
  for (const Gate& gate : circuit.gates) {
    switch (gate.kind) {
      case Gate::Kind::H:
        text += "h q[" + std::to_string(gate.qubit) + "];\n";
        break;
      case Gate::Kind::RZ:
        text += "rz(" + format_angle(gate.angle) + ") q[" +
                std::to_string(gate.qubit) + "];\n";
        break;
      case Gate::Kind::RX:
        text += "rx(" + format_angle(gate.angle) + ") q[" +
                std::to_string(gate.qubit) + "];\n";
        break;
      case Gate::Kind::CNOT:
        text += "cx q[" + std::to_string(gate.control) + "],q[" +
                std::to_string(gate.qubit) + "];\n";
        break;
    }
  }
  return text;
}

}  // namespace quboc
