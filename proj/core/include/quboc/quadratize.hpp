#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quboc/polynomial.hpp"
#include "quboc/rational.hpp"
#include "quboc/registry.hpp"

namespace quboc {

enum class QuadratizationStrategy {
  /// Pair substitution z = xy with penalty P(xy - 2xz - 2yz + 3z).
  Rosenberg,
  /// Per-monomial transform a * prod(x_j) -> a (sum(x_j) - |S| + 1) t for
  /// negative a; rejects positive high-degree terms.
  Local,
  /// Local transform on negative high-degree monomials, pair substitution on
  /// whatever high-degree structure remains.
  Hybrid,
};

/// One pair substitution: aux = x * y enforced by constant * gadget, where
/// gadget = xy - 2x*aux - 2y*aux + 3aux is 0 iff aux = xy.
struct PairSubstitution {
  std::string x;
  std::string y;
  std::string aux;
  Rational constant;
  PseudoBooleanPolynomial penalty;
};

/// One negative-monomial replacement: the coefficient and variable set of the
/// replaced term plus its fresh auxiliary.
struct LocalSubstitution {
  std::vector<std::string> monomial;
  Rational coefficient;
  std::string aux;
};

struct QuadratizationReport {
  PseudoBooleanPolynomial output;
  std::vector<PairSubstitution> substitutions;
  std::vector<LocalSubstitution> locals;
};

/// Repeatedly substitutes the most valuable variable pair until the degree
/// drops to 2, appending the penalty gadget after each substitution.
/// Replacement applies to every term containing the pair, quadratic terms
/// included. Pair choice: most degree>=3 terms containing the pair, then
/// largest total |coefficient| over all terms containing it, then
/// lexicographically smallest. P defaults to penalty_constant of the input.
/// Auxiliaries are fresh `z` variables from the registry.
QuadratizationReport rosenberg_quadratize(
    const PseudoBooleanPolynomial& f, VariableRegistry& registry,
    const std::optional<Rational>& P = std::nullopt);

/// Replaces each degree>=3 monomial independently with its gadget, using a
/// fresh `aux` variable per monomial. Every high-degree coefficient must be
/// negative; positive ones raise CompileError pointing at the pair-based
/// strategies. Minimizing over each auxiliary recovers the original value at
/// every assignment.
QuadratizationReport negative_monomial_quadratize(
    const PseudoBooleanPolynomial& f, VariableRegistry& registry);

/// Strategy dispatcher; P applies to the pair-substitution gadgets and
/// defaults to penalty_constant of the input polynomial.
QuadratizationReport quadratize(const PseudoBooleanPolynomial& f,
                                QuadratizationStrategy strategy,
                                VariableRegistry& registry,
                                const std::optional<Rational>& P = std::nullopt);

}  // namespace quboc
