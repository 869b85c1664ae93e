#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quboc/polynomial.hpp"
#include "quboc/rational.hpp"
#include "quboc/registry.hpp"

namespace quboc {

enum class ConstraintKind {
  Equality,    // h == 0
  Inequality,  // h <= 0
};

/// A constraint already lowered to binary variables.
struct PenaltyConstraint {
  std::string id;
  ConstraintKind kind = ConstraintKind::Equality;
  PseudoBooleanPolynomial h;
};

/// One penalty added to the objective: `constant * polynomial`, where the
/// polynomial is 0 exactly on assignments satisfying the constraint (with
/// optimal slack completion) and >= 1 otherwise.
struct PenaltyTerm {
  std::string id;
  Rational constant;
  PseudoBooleanPolynomial polynomial;
};

struct PenalizedProblem {
  PseudoBooleanPolynomial objective;
  std::vector<PenaltyTerm> penalties;
  std::vector<IntegerEncoding> slacks;
  /// objective + sum of constant * polynomial over penalties.
  PseudoBooleanPolynomial assembled;
};

/// ub(f) - lb(f) + 1 = 1 + sum of |a_S| over nonempty S. Any penalty weight
/// at or above this value makes every infeasible assignment score worse than
/// every feasible one (integer-valued violations assumed).
Rational penalty_constant(const PseudoBooleanPolynomial& f);

/// P * h^2, multilinear.
PseudoBooleanPolynomial penalize_equality(const PseudoBooleanPolynomial& h,
                                          const Rational& P);

struct InequalityPenalty {
  /// (h + s)^2 with s the decoded slack; plain h^2 when no slack is needed.
  PseudoBooleanPolynomial penalty;
  /// Absent when lb(h) >= 0 (h <= 0 then forces h == 0).
  std::optional<IntegerEncoding> slack;
};

/// Converts h <= 0 into the equality h + s == 0 with a fresh slack
/// s in [0, -lb(h)], binarized over fresh `t` bits, and squares it.
/// Requires integer coefficients. lb(h) > 0 means no assignment can satisfy
/// the constraint: hard CompileError.
InequalityPenalty penalize_inequality(const PseudoBooleanPolynomial& h,
                                      VariableRegistry& registry);

/// Applies a shared penalty constant, defaulting to penalty_constant(f), to
/// every constraint and assembles f' = f + sum P * penalty_i. On feasible
/// assignments (with optimal slack bits) f' equals f; every infeasible
/// assignment exceeds ub(f).
PenalizedProblem assemble(
    const PseudoBooleanPolynomial& f,
    const std::vector<PenaltyConstraint>& constraints,
    VariableRegistry& registry,
    const std::optional<Rational>& penalty_override = std::nullopt);

}  // namespace quboc
