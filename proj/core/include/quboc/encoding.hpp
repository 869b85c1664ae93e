#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quboc/polynomial.hpp"
#include "quboc/rational.hpp"
#include "quboc/registry.hpp"

namespace quboc {

/// Binarizes the integer range [a, c] with n = ceil(log2(c - a + 1)) fresh
/// bits from the given prefix. Bits 1..n-1 carry weights 1, 2, 4, ...; the
/// top bit carries 2^(n-1) - b with b = a + 2^n - 1 - c, which clips the
/// decoded range to exactly [a, c]. The encoding is appended to the
/// registry's bit order but not registered under a variable kind; use
/// encode_integer for problem variables.
IntegerEncoding build_integer_encoding(const std::string& source,
                                       const BigInt& a, const BigInt& c,
                                       VariableRegistry& registry,
                                       const std::string& bit_prefix);

/// build_integer_encoding with prefix "x", registered as an integer problem
/// variable. Throws CompileError when a > c.
IntegerEncoding encode_integer(const std::string& name, const BigInt& a,
                               const BigInt& c, VariableRegistry& registry);

/// One indicator bit per level, named `<name>=<level>`, plus the constraint
/// polynomial sum(indicators) - 1. Requires >= 2 distinct levels.
OneHotEncoding encode_categorical(const std::string& name,
                                  const std::vector<std::string>& levels,
                                  VariableRegistry& registry);

/// n x n indicator matrix with variables `<name>[j]=k`, row constraints
/// (one value per position) and column constraints (one position per value).
PermutationEncoding encode_permutation(const std::string& name, std::size_t n,
                                       VariableRegistry& registry);

/// Predicate tree over one-hot encoded categorical variables. Leaves test a
/// variable against a level or two variables against each other; inner nodes
/// combine with and/or/not.
class IversonExpr {
 public:
  enum class Kind { And, Or, Not, EqLevel, EqVars };

  static IversonExpr eq_level(std::string variable, std::string level);
  static IversonExpr eq_vars(std::string lhs, std::string rhs);
  static IversonExpr and_(IversonExpr a, IversonExpr b);
  static IversonExpr or_(IversonExpr a, IversonExpr b);
  static IversonExpr not_(IversonExpr a);

  Kind kind() const { return kind_; }
  const std::vector<IversonExpr>& children() const { return children_; }
  const std::string& variable() const { return variable_; }
  const std::string& level() const { return level_; }
  const std::string& other_variable() const { return level_; }

  bool operator==(const IversonExpr& other) const = default;

 private:
  explicit IversonExpr(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<IversonExpr> children_;
  std::string variable_;
  /// Level name for EqLevel, second variable name for EqVars.
  std::string level_;
};

/// Converts a predicate tree to the multilinear polynomial that is 1 exactly
/// when the predicate holds, assuming every referenced variable is one-hot
/// feasible: and -> [P][Q], or -> [P]+[Q]-[P][Q], not -> 1-[P],
/// eq_level(u,l) -> indicator of u=l, eq_vars(u,v) -> sum over shared levels
/// of the paired indicators. Unknown variables or levels raise CompileError.
PseudoBooleanPolynomial expand_iverson(const IversonExpr& expr,
                                       const VariableRegistry& registry);

/// Disjunction of signed literals: +j means variable xj, -j its negation.
using Clause = std::vector<int>;

/// Polynomial counting unsatisfied clauses: each clause contributes the
/// product of (1 - xj) over its positive literals and xj over its negated
/// ones. Variable index j maps to name `x<j>`. Tautological clauses raise
/// TautologicalClauseError; empty clauses and an empty clause list raise
/// CompileError.
PseudoBooleanPolynomial maxsat_objective(const std::vector<Clause>& clauses);

}  // namespace quboc
