#include "quboc/penalty.hpp"

#include <utility>

#include "quboc/encoding.hpp"
#include "quboc/errors.hpp"

namespace quboc {
namespace {

void require_integer_coefficients(const PseudoBooleanPolynomial& h,
                                  const std::string& id) {
  for (const auto& [key, coefficient] : h.terms()) {
    if (!is_integer(coefficient)) {
      throw CompileError(
          "constraint '" + id + "' has non-integer coefficient " +
          to_string(coefficient) +
          "; scale the constraint to integer coefficients first");
    }
  }
}

}  // namespace

Rational penalty_constant(const PseudoBooleanPolynomial& f) {
  Rational total = 1;
  for (const auto& [key, coefficient] : f.terms()) {
    if (key.empty()) continue;
    total += coefficient < 0 ? Rational(-coefficient) : coefficient;
  }
  return total;
}

PseudoBooleanPolynomial penalize_equality(const PseudoBooleanPolynomial& h,
                                          const Rational& P) {
  return h * h * P;
}

InequalityPenalty penalize_inequality(const PseudoBooleanPolynomial& h,
                                      VariableRegistry& registry) {
  require_integer_coefficients(h, "h");
  const Rational lb = h.lower_bound();
  if (lb > 0) {
    throw CompileError("inequality constraint is infeasible: lower bound " +
                       to_string(lb) + " > 0");
  }

  InequalityPenalty result;
  if (lb == 0) {
    result.penalty = h * h;
    return result;
  }

  const std::string slack_name =
      "s" + std::to_string(registry.slack_encodings().size() + 1);
  registry.reserve(slack_name);
  IntegerEncoding slack =
      build_integer_encoding(slack_name, 0, -rational_floor(lb), registry, "t");
  registry.add_slack_encoding(slack);

  const PseudoBooleanPolynomial shifted = h + slack.decode;
  result.penalty = shifted * shifted;
  result.slack = std::move(slack);
  return result;
}

PenalizedProblem assemble(const PseudoBooleanPolynomial& f,
                          const std::vector<PenaltyConstraint>& constraints,
                          VariableRegistry& registry,
                          const std::optional<Rational>& penalty_override) {
  const Rational P = penalty_override.value_or(penalty_constant(f));
  if (P <= 0) {
    throw CompileError("penalty constant must be positive, got " +
                       to_string(P));
  }

  PenalizedProblem problem;
  problem.objective = f;
  problem.assembled = f;
  for (const PenaltyConstraint& constraint : constraints) {
    require_integer_coefficients(constraint.h, constraint.id);
    PenaltyTerm term;
    term.id = constraint.id;
    term.constant = P;
    if (constraint.kind == ConstraintKind::Equality) {
      term.polynomial = constraint.h * constraint.h;
    } else {
      InequalityPenalty lowered = penalize_inequality(constraint.h, registry);
      term.polynomial = std::move(lowered.penalty);
      if (lowered.slack.has_value()) {
        problem.slacks.push_back(std::move(*lowered.slack));
      }
    }
    problem.assembled += term.polynomial * P;
    problem.penalties.push_back(std::move(term));
  }
  return problem;
}

}  // namespace quboc
