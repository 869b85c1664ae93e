#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quboc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input files (problem JSON, DIMACS CNF). CLI exit code 2.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid or unsupported pipeline requests (bad bounds, degree limits,
/// non-integer constraint coefficients, ...). CLI exit code 3.
class CompileError : public Error {
 public:
  using Error::Error;
};

/// Solver-side failures (size guards, bad backend parameters). CLI exit code 4.
class BackendError : public Error {
 public:
  using Error::Error;
};

/// An evaluation referenced a variable the assignment does not cover.
class MissingVariableError : public Error {
 public:
  explicit MissingVariableError(const std::string& variable)
      : Error("assignment does not cover variable '" + variable + "'"),
        variable_(variable) {}

  const std::string& variable() const { return variable_; }

 private:
  std::string variable_;
};

/// A clause contains a variable together with its negation. Warning-grade:
/// callers that prefer to drop such clauses can catch this specifically.
class TautologicalClauseError : public CompileError {
 public:
  TautologicalClauseError(std::size_t clause_index, const std::string& variable)
      : CompileError("clause " + std::to_string(clause_index) +
                     " is tautological: contains both '" + variable +
                     "' and its negation"),
        clause_index_(clause_index) {}

  std::size_t clause_index() const { return clause_index_; }

 private:
  std::size_t clause_index_;
};

}  // namespace quboc
