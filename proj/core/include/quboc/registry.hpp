#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quboc/polynomial.hpp"
#include "quboc/rational.hpp"

namespace quboc {

/// Binarization of one bounded integer variable. The decode polynomial maps
/// the bit variables back to the integer value; every bit pattern lands in
/// [lower, upper] and every value in the range has at least one preimage.
struct IntegerEncoding {
  std::string source;
  BigInt lower;
  BigInt upper;
  std::vector<std::string> bits;
  PseudoBooleanPolynomial decode;

  bool operator==(const IntegerEncoding& other) const = default;
};

/// One-hot encoding of a categorical variable: one indicator bit per level
/// plus the constraint polynomial sum(indicators) - 1, intended == 0.
struct OneHotEncoding {
  std::string source;
  std::vector<std::string> levels;
  std::vector<std::string> indicators;
  PseudoBooleanPolynomial constraint;

  bool operator==(const OneHotEncoding& other) const = default;
};

/// Permutation of size n as an n x n indicator matrix. vars[j][k] is 1 when
/// position j+1 holds value k+1. Row constraints force one value per
/// position, column constraints one position per value.
struct PermutationEncoding {
  std::string source;
  std::size_t size = 0;
  std::vector<std::vector<std::string>> vars;
  std::vector<PseudoBooleanPolynomial> row_constraints;
  std::vector<PseudoBooleanPolynomial> column_constraints;

  bool operator==(const PermutationEncoding& other) const = default;
};

/// Problem-level values recovered from a binary assignment.
struct DecodedValues {
  std::map<std::string, bool> booleans;
  std::map<std::string, BigInt> integers;
  /// Level per categorical variable; absent when the one-hot constraint is
  /// violated in the assignment.
  std::map<std::string, std::string> categories;
  /// Value per position (1-based sequence); empty when some row is not
  /// one-hot.
  std::map<std::string, std::vector<std::size_t>> permutations;
  /// True when every categorical and permutation variable decoded cleanly.
  bool encoding_valid = true;
};

/// Tracks every binary variable created during compilation, in allocation
/// order, together with the encodings that map problem-level variables onto
/// them. The allocation order fixes matrix indices for QUBO/Ising export.
class VariableRegistry {
 public:
  /// Marks a name as taken without making it a binary variable (used for
  /// declared problem-level names such as integer variables).
  void reserve(const std::string& name);

  /// Smallest `prefix<k>` (k >= 1) not yet taken; marks it taken.
  std::string allocate(const std::string& prefix);

  /// Appends a binary variable to the allocation order. Errors when the name
  /// is already a binary variable.
  void add_binary(const std::string& name);

  /// Declares a problem-level boolean variable (it is its own binary bit).
  void declare_bool(const std::string& name);

  const std::vector<std::string>& binary_variables() const { return order_; }
  bool has_binary(const std::string& name) const;
  /// Position in the allocation order; throws CompileError when absent.
  std::size_t index_of(const std::string& name) const;

  void add_integer_encoding(IntegerEncoding encoding);
  void add_categorical_encoding(OneHotEncoding encoding);
  void add_permutation_encoding(PermutationEncoding encoding);
  /// Slack encodings decode like integer encodings but are stripped from
  /// problem-level reports.
  void add_slack_encoding(IntegerEncoding encoding);
  /// Marks a binary variable as a quadratization auxiliary.
  void mark_auxiliary(const std::string& name);

  const std::vector<IntegerEncoding>& integer_encodings() const {
    return integers_;
  }
  const std::vector<OneHotEncoding>& categorical_encodings() const {
    return categoricals_;
  }
  const std::vector<PermutationEncoding>& permutation_encodings() const {
    return permutations_;
  }
  const std::vector<IntegerEncoding>& slack_encodings() const { return slacks_; }
  const std::set<std::string>& auxiliary_variables() const { return auxiliary_; }
  const std::vector<std::string>& boolean_variables() const { return booleans_; }

  const IntegerEncoding* find_integer(const std::string& source) const;
  const OneHotEncoding* find_categorical(const std::string& source) const;
  const PermutationEncoding* find_permutation(const std::string& source) const;

  /// Recovers problem-level values from a full binary assignment. Slack and
  /// auxiliary variables are ignored.
  DecodedValues decode(const Assignment& bits) const;

 private:
  std::set<std::string> taken_;
  std::map<std::string, std::size_t> counters_;
  std::vector<std::string> order_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> booleans_;
  std::vector<IntegerEncoding> integers_;
  std::vector<OneHotEncoding> categoricals_;
  std::vector<PermutationEncoding> permutations_;
  std::vector<IntegerEncoding> slacks_;
  std::set<std::string> auxiliary_;
};

/// Integer value of an encoding at a bit assignment; always within
/// [lower, upper].
BigInt decode_integer(const IntegerEncoding& encoding, const Assignment& bits);

}  // namespace quboc
