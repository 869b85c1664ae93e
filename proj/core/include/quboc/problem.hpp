#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quboc/encoding.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/rational.hpp"

namespace quboc {

enum class Sense { Minimize, Maximize };

enum class Relation {
  EqualsZero,  // h == 0
  AtMostZero,  // h <= 0
};

/// One declared problem variable. Only the fields matching `kind` are
/// meaningful: lower/upper for Integer, levels for Categorical, size for
/// Permutation.
struct VariableDecl {
  enum class Kind { Bool, Integer, Categorical, Permutation };

  std::string name;
  Kind kind = Kind::Bool;
  BigInt lower = 0;
  BigInt upper = 0;
  std::vector<std::string> levels;
  std::size_t size = 0;

  static VariableDecl boolean(std::string name);
  static VariableDecl integer(std::string name, BigInt lower, BigInt upper);
  static VariableDecl categorical(std::string name,
                                  std::vector<std::string> levels);
  static VariableDecl permutation(std::string name, std::size_t size);

  bool operator==(const VariableDecl& other) const = default;
};

struct Constraint {
  IntegerPolynomial polynomial;
  Relation relation = Relation::EqualsZero;

  bool operator==(const Constraint& other) const = default;
};

enum class ObjectiveKind { Polynomial, Clauses, Iverson };

/// A full optimization problem as read from a problem file. Polynomial
/// objectives and constraints may reference declared bool variables, declared
/// integer variables, categorical indicators (`name=level`), and permutation
/// cells (`name[j]=k`, 1-based). Clause objectives index the declared bool
/// variables by position (1-based, DIMACS sign convention). Iverson
/// objectives score a predicate over categorical variables as 0/1.
struct ProblemSpec {
  std::string name;
  Sense sense = Sense::Minimize;
  std::vector<VariableDecl> variables;
  ObjectiveKind objective_kind = ObjectiveKind::Polynomial;
  IntegerPolynomial objective;
  std::vector<Clause> clauses;
  std::optional<IversonExpr> predicate;
  std::vector<Constraint> constraints;

  bool operator==(const ProblemSpec& other) const = default;
};

/// Structural checks beyond JSON shape: distinct well-formed names, ordered
/// integer bounds, >= 2 distinct categorical levels, declared references in
/// the objective and constraints, clause literals within range. Throws
/// ParseError with a field path.
void validate_problem(const ProblemSpec& spec);

/// Parses and validates a problem from JSON text. Throws ParseError.
ProblemSpec parse_problem_text(const std::string& text);

/// Reads the file and delegates to parse_problem_text. Unreadable files
/// raise ParseError.
ProblemSpec parse_problem_file(const std::string& path);

/// Canonical JSON rendering. parse_problem_text(print_problem(s)) == s for
/// every valid spec, and equal specs print byte-identically.
std::string print_problem(const ProblemSpec& spec);

struct DimacsInstance {
  std::size_t variable_count = 0;
  std::vector<Clause> clauses;
  /// Non-fatal findings (clause count differs from the header). Promoted to
  /// ParseError in strict mode.
  std::vector<std::string> warnings;
};

/// Parses DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header,
/// then whitespace-separated literals with `0` closing each clause. Malformed
/// headers, literals out of range, unterminated clauses, and empty clauses
/// raise ParseError.
DimacsInstance parse_dimacs_text(const std::string& text, bool strict = false);

DimacsInstance parse_dimacs_file(const std::string& path, bool strict = false);

/// MIN-2..k-SAT style spec over bools x1..xn: minimize the number of violated
/// clauses.
ProblemSpec problem_from_dimacs(const DimacsInstance& instance);

}  // namespace quboc
