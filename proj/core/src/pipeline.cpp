#include "quboc/pipeline.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "quboc/encoding.hpp"
#include "quboc/errors.hpp"
#include "quboc/version.hpp"

namespace quboc {
namespace {

/// Spread of the random initial QAOA angles around zero.
constexpr double kInitialAngleSpread = 0.25;
constexpr double kOptimizerStep = 0.25;

template <typename Fn>
auto stage(const char* label, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const CompileError& error) {
    throw CompileError(std::string(label) + ": " + error.what());
  } catch (const MissingVariableError& error) {
    throw CompileError(std::string(label) + ": " + error.what());
  }
}

/// Simultaneous variable renaming; `names` must be injective on the
/// polynomial's variables.
PseudoBooleanPolynomial rename_variables(
    const PseudoBooleanPolynomial& f,
    const std::map<std::string, std::string>& names) {
  PseudoBooleanPolynomial::TermMap renamed;
  for (const auto& [key, coefficient] : f.terms()) {
    PseudoBooleanPolynomial::TermKey mapped;
    mapped.reserve(key.size());
    for (const std::string& name : key) {
      mapped.push_back(names.at(name));
    }
    renamed[mapped] = coefficient;
  }
  return PseudoBooleanPolynomial::from_terms(renamed);
}

PseudoBooleanPolynomial lower_objective(const ProblemSpec& spec,
                                        const VariableRegistry& registry,
                                        const std::map<std::string, PseudoBooleanPolynomial>& decoders) {
  switch (spec.objective_kind) {
    case ObjectiveKind::Polynomial:
      return spec.objective.substitute_binary(decoders);
    case ObjectiveKind::Clauses: {
      PseudoBooleanPolynomial violated = maxsat_objective(spec.clauses);
      std::map<std::string, std::string> names;
      bool identity = true;
      std::size_t position = 0;
      for (const VariableDecl& decl : spec.variables) {
        if (decl.kind != VariableDecl::Kind::Bool) continue;
        ++position;
        const std::string placeholder = "x" + std::to_string(position);
        names[placeholder] = decl.name;
        identity = identity && placeholder == decl.name;
      }
      return identity ? violated : rename_variables(violated, names);
    }
    case ObjectiveKind::Iverson:
      return expand_iverson(*spec.predicate, registry);
  }
  std::abort();
}

QaoaParams initial_angles(std::size_t layers, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-kInitialAngleSpread,
                                              kInitialAngleSpread);
  QaoaParams params;
  for (std::size_t layer = 0; layer < layers; ++layer) {
    params.gamma.push_back(draw(rng));
    params.beta.push_back(draw(rng));
  }
  return params;
}

}  // namespace

CompileOutput compile(const ProblemSpec& spec, const CompileFlags& flags) {
  validate_problem(spec);

  CompileOutput output;
  output.problem = spec;
  output.flags = flags;
  output.tool_version = kVersion;

  std::map<std::string, PseudoBooleanPolynomial> decoders;
  stage("encoding", [&] {
    for (const VariableDecl& decl : spec.variables) {
      switch (decl.kind) {
        case VariableDecl::Kind::Bool:
          output.registry.declare_bool(decl.name);
          decoders[decl.name] = PseudoBooleanPolynomial::variable(decl.name);
          break;
        case VariableDecl::Kind::Integer: {
          const IntegerEncoding encoding =
              encode_integer(decl.name, decl.lower, decl.upper,
                             output.registry);
          decoders[decl.name] = encoding.decode;
          break;
        }
        case VariableDecl::Kind::Categorical: {
          const OneHotEncoding encoding = encode_categorical(
              decl.name, decl.levels, output.registry);
          for (const std::string& indicator : encoding.indicators) {
            decoders[indicator] = PseudoBooleanPolynomial::variable(indicator);
          }
          break;
        }
        case VariableDecl::Kind::Permutation: {
          const PermutationEncoding encoding =
              encode_permutation(decl.name, decl.size, output.registry);
          for (const auto& row : encoding.vars) {
            for (const std::string& cell : row) {
              decoders[cell] = PseudoBooleanPolynomial::variable(cell);
            }
          }
          break;
        }
      }
    }
    return 0;
  });

  output.objective = stage("objective", [&] {
    PseudoBooleanPolynomial objective =
        lower_objective(spec, output.registry, decoders);
    if (spec.sense == Sense::Maximize) objective = -objective;
    return objective;
  });

  const std::vector<PenaltyConstraint> constraints = stage("constraints", [&] {
    std::vector<PenaltyConstraint> list;
    for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
      PenaltyConstraint constraint;
      constraint.id = "c" + std::to_string(i + 1);
      constraint.kind = spec.constraints[i].relation == Relation::EqualsZero
                            ? ConstraintKind::Equality
                            : ConstraintKind::Inequality;
      constraint.h = spec.constraints[i].polynomial.substitute_binary(decoders);
      list.push_back(std::move(constraint));
    }
    for (const OneHotEncoding& encoding :
         output.registry.categorical_encodings()) {
      list.push_back({"onehot:" + encoding.source, ConstraintKind::Equality,
                      encoding.constraint});
    }
    for (const PermutationEncoding& encoding :
         output.registry.permutation_encodings()) {
      for (std::size_t j = 0; j < encoding.size; ++j) {
        list.push_back({"perm:" + encoding.source + ":row" +
                            std::to_string(j + 1),
                        ConstraintKind::Equality, encoding.row_constraints[j]});
      }
      for (std::size_t k = 0; k < encoding.size; ++k) {
        list.push_back({"perm:" + encoding.source + ":col" +
                            std::to_string(k + 1),
                        ConstraintKind::Equality,
                        encoding.column_constraints[k]});
      }
    }
    return list;
  });

  output.penalized = stage("penalty", [&] {
    return assemble(output.objective, constraints, output.registry,
                    flags.penalty);
  });
  output.logical_variables = output.registry.binary_variables();

  output.quadratization = stage("quadratize", [&] {
    return quadratize(output.penalized.assembled, flags.strategy,
                      output.registry, flags.penalty);
  });

  output.qubo = stage("qubo", [&] {
    return qubo_from_polynomial(output.quadratization.output,
                                output.registry.binary_variables());
  });
  output.ising = stage("ising", [&] { return qubo_to_ising(output.qubo); });
  output.hamiltonian = stage("hamiltonian", [&] {
    return ising_polynomial_from_pb(output.penalized.assembled,
                                    output.logical_variables);
  });
  return output;
}

SolveReport run_solve(const CompileOutput& output, const SolveFlags& flags) {
  SolveReport report;
  report.backend = flags.backend;

  std::vector<PseudoBooleanPolynomial> penalties;
  for (const PenaltyTerm& term : output.penalized.penalties) {
    penalties.push_back(term.polynomial);
  }

  switch (flags.backend) {
    case SolveBackend::Annealer:
      report.samples =
          sample(output.ising, flags.reads, flags.seed, flags.schedule);
      break;
    case SolveBackend::BruteForce:
      report.samples = brute_force(output.penalized.assembled,
                                   /*minimizers_only=*/true);
      break;
    case SolveBackend::Qaoa: {
      if (flags.layers < 1) {
        throw BackendError("qaoa backend needs at least one layer");
      }
      const QaoaResult tuned = optimize_params(
          output.hamiltonian, initial_angles(flags.layers, flags.seed),
          flags.budget, ExpectationMode::Exact, flags.shots, flags.seed,
          kOptimizerStep);
      const StateVector state = simulate(build_ansatz(
          output.hamiltonian, tuned.params, output.logical_variables.size()));
      report.samples =
          sample_counts(state, flags.shots, flags.seed,
                        output.logical_variables, output.penalized.assembled);
      report.qaoa = QaoaSummary{tuned.params, tuned.energy};
      break;
    }
  }

  report.decoded = decode_samples(report.samples, output.registry, penalties);
  return report;
}

}  // namespace quboc
