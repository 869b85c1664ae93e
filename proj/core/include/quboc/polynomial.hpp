#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "quboc/rational.hpp"

namespace quboc {

/// Variable name -> 0/1 value.
using Assignment = std::map<std::string, bool>;

/// Multilinear polynomial over binary variables. Each term is a set of
/// variable names (sorted, duplicate-free) with an exact rational
/// coefficient; the empty set holds the constant. Products reduce with
/// x*x = x, so the representation stays multilinear by construction.
class PseudoBooleanPolynomial {
 public:
  using TermKey = std::vector<std::string>;
  using TermMap = std::map<TermKey, Rational>;

  PseudoBooleanPolynomial() = default;

  static PseudoBooleanPolynomial constant(const Rational& value);
  static PseudoBooleanPolynomial variable(const std::string& name);
  /// Coefficient times the product of the named variables. Duplicate names
  /// collapse (x*x = x).
  static PseudoBooleanPolynomial monomial(const std::vector<std::string>& names,
                                          const Rational& coefficient);
  /// Builds from a raw term map; keys are sorted and deduplicated, zero
  /// coefficients dropped.
  static PseudoBooleanPolynomial from_terms(const TermMap& terms);

  const TermMap& terms() const { return terms_; }
  /// Coefficient of the given variable set (zero when absent).
  Rational coefficient(const TermKey& key) const;
  Rational constant_term() const;

  bool is_zero() const { return terms_.empty(); }
  /// Size of the largest variable set with a nonzero coefficient; 0 for
  /// constants.
  std::size_t degree() const;
  std::size_t term_count() const { return terms_.size(); }
  std::set<std::string> variables() const;

  PseudoBooleanPolynomial& operator+=(const PseudoBooleanPolynomial& other);
  PseudoBooleanPolynomial& operator-=(const PseudoBooleanPolynomial& other);
  PseudoBooleanPolynomial& operator*=(const PseudoBooleanPolynomial& other);
  PseudoBooleanPolynomial& operator*=(const Rational& scalar);

  friend PseudoBooleanPolynomial operator+(PseudoBooleanPolynomial lhs,
                                           const PseudoBooleanPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend PseudoBooleanPolynomial operator-(PseudoBooleanPolynomial lhs,
                                           const PseudoBooleanPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend PseudoBooleanPolynomial operator*(PseudoBooleanPolynomial lhs,
                                           const PseudoBooleanPolynomial& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend PseudoBooleanPolynomial operator*(PseudoBooleanPolynomial lhs,
                                           const Rational& scalar) {
    lhs *= scalar;
    return lhs;
  }
  friend PseudoBooleanPolynomial operator*(const Rational& scalar,
                                           PseudoBooleanPolynomial rhs) {
    rhs *= scalar;
    return rhs;
  }
  PseudoBooleanPolynomial operator-() const;

  bool operator==(const PseudoBooleanPolynomial& other) const = default;

  /// Replaces every occurrence of the variable with the given polynomial.
  PseudoBooleanPolynomial substitute(
      const std::string& name, const PseudoBooleanPolynomial& replacement) const;

  /// Exact value at the assignment. Every variable of the polynomial must be
  /// covered; otherwise MissingVariableError.
  Rational evaluate(const Assignment& assignment) const;

  /// Constant plus the sum of all negative coefficients. Cheap certified
  /// lower bound: every term contributes its coefficient or zero.
  Rational lower_bound() const;
  /// Constant plus the sum of all positive coefficients.
  Rational upper_bound() const;

  /// Human-readable form such as "-9 + 13 x1 - 18 x1 x2". Terms print in
  /// (degree, lexicographic) order with the constant first.
  std::string to_string() const;

 private:
  void add_term(TermKey key, const Rational& coefficient);

  TermMap terms_;
};

/// Polynomial over bounded integer variables, kept as exponent maps. Used to
/// hold objectives and constraints before binarization.
class IntegerPolynomial {
 public:
  /// Variable name -> exponent (>= 1).
  using ExponentMap = std::map<std::string, unsigned>;
  using TermMap = std::map<ExponentMap, Rational>;

  IntegerPolynomial() = default;

  static IntegerPolynomial constant(const Rational& value);
  static IntegerPolynomial variable(const std::string& name);
  static IntegerPolynomial monomial(const ExponentMap& exponents,
                                    const Rational& coefficient);
  static IntegerPolynomial from_terms(const TermMap& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest total degree (sum of exponents) among nonzero terms.
  std::size_t degree() const;
  std::set<std::string> variables() const;

  IntegerPolynomial& operator+=(const IntegerPolynomial& other);
  IntegerPolynomial& operator-=(const IntegerPolynomial& other);
  IntegerPolynomial& operator*=(const IntegerPolynomial& other);
  IntegerPolynomial& operator*=(const Rational& scalar);

  friend IntegerPolynomial operator+(IntegerPolynomial lhs,
                                     const IntegerPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend IntegerPolynomial operator-(IntegerPolynomial lhs,
                                     const IntegerPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend IntegerPolynomial operator*(IntegerPolynomial lhs,
                                     const IntegerPolynomial& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend IntegerPolynomial operator*(IntegerPolynomial lhs,
                                     const Rational& scalar) {
    lhs *= scalar;
    return lhs;
  }
  IntegerPolynomial operator-() const;

  bool operator==(const IntegerPolynomial& other) const = default;

  /// Exact value at an integer point. Throws MissingVariableError when a
  /// variable is uncovered.
  Rational evaluate(const std::map<std::string, BigInt>& point) const;

  /// Substitutes each variable with the matching binary polynomial and
  /// expands powers (multilinear reduction applies). Variables without a
  /// mapping raise MissingVariableError.
  PseudoBooleanPolynomial substitute_binary(
      const std::map<std::string, PseudoBooleanPolynomial>& decoders) const;

  std::string to_string() const;

 private:
  void add_term(const ExponentMap& exponents, const Rational& coefficient);

  TermMap terms_;
};

}  // namespace quboc
