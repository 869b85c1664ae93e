#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quboc/polynomial.hpp"
#include "quboc/rational.hpp"

namespace quboc {

/// f(x) = sum_{j,k} Q[j][k] x_j x_k + c over binary x, Q symmetric. Linear
/// coefficients sit on the diagonal (x^2 = x).
struct QuboModel {
  std::vector<std::string> variables;
  std::vector<std::vector<Rational>> Q;
  Rational constant;

  std::size_t size() const { return variables.size(); }
  /// Value at the binary assignment given as a bitmask (bit j = variable j).
  Rational value_at_bits(std::uint64_t bits) const;

  bool operator==(const QuboModel& other) const = default;
};

/// f(s) = sum_{j,k} J[j][k] s_j s_k + sum_j h[j] s_j + offset over spins
/// s in {-1,+1}. J is symmetric with a zero diagonal; the constant lives in
/// the explicit offset field.
struct IsingModel {
  std::vector<std::string> variables;
  std::vector<std::vector<Rational>> J;
  std::vector<Rational> h;
  Rational offset;

  std::size_t size() const { return variables.size(); }
  Rational value_at_spins(const std::vector<int>& spins) const;
  /// Value at spins s_j = 1 - 2 x_j for the bitmask x.
  Rational value_at_bits(std::uint64_t bits) const;
  /// Coupling matrix in the alternative layout that folds the offset into
  /// entry (0, 0) instead of keeping a separate field.
  std::vector<std::vector<Rational>> coupling_with_folded_offset() const;

  bool operator==(const IsingModel& other) const = default;
};

/// Arbitrary-degree polynomial over spin variables: sum over index sets S of
/// a_S * prod_{j in S} s_j. Keys are sorted 0-based indices into the
/// variable order; the empty key holds the constant.
class IsingPolynomial {
 public:
  using Key = std::vector<std::size_t>;
  using TermMap = std::map<Key, Rational>;

  IsingPolynomial() = default;
  IsingPolynomial(std::vector<std::string> variables, TermMap terms);

  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  std::size_t qubit_count() const { return variables_.size(); }
  Rational constant() const;
  std::size_t degree() const;

  Rational evaluate_spins(const std::vector<int>& spins) const;
  /// Value at spins s_j = 1 - 2 x_j for the bitmask x (bit j = variable j).
  Rational value_at_bits(std::uint64_t bits) const;

  bool operator==(const IsingPolynomial& other) const = default;

 private:
  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Packs a degree-<=2 polynomial into matrix form over the given variable
/// order: linear terms on the diagonal, half of each cross coefficient on
/// the two symmetric off-diagonal slots. Degree > 2 or a variable missing
/// from the order raises CompileError.
QuboModel qubo_from_polynomial(const PseudoBooleanPolynomial& f,
                               const std::vector<std::string>& order);
/// Same with the polynomial's own variables in sorted order.
QuboModel qubo_from_polynomial(const PseudoBooleanPolynomial& f);

/// Substitution x = (1 - s) / 2: J = Q/4 off the diagonal,
/// h_j = -(1/2) sum_k Q[j][k], offset = c + (1/4) sum Q + (1/4) trace Q.
/// Rejects asymmetric Q.
IsingModel qubo_to_ising(const QuboModel& qubo);

/// Substitution s = 1 - 2x: Q[j][k] = 4 J[j][k] off the diagonal,
/// Q[j][j] = -4 sum_k J[j][k] - 2 h_j, c = sum J + sum h + offset. Exact
/// inverse of qubo_to_ising.
QuboModel ising_to_qubo(const IsingModel& ising);

/// Spin-space form of an arbitrary-degree binary polynomial under
/// x_j = (1 - s_j) / 2; exact coefficients.
IsingPolynomial ising_polynomial_from_pb(const PseudoBooleanPolynomial& f,
                                         const std::vector<std::string>& order);
IsingPolynomial ising_polynomial_from_pb(const PseudoBooleanPolynomial& f);

/// Expands a QUBO model back into polynomial form.
PseudoBooleanPolynomial polynomial_from_qubo(const QuboModel& qubo);

/// Expands an Ising model into binary-variable polynomial form via
/// s = 1 - 2x.
PseudoBooleanPolynomial binary_polynomial_from_ising(const IsingModel& ising);

}  // namespace quboc
