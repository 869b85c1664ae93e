#include "quboc/encoding.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "quboc/errors.hpp"

namespace quboc {
namespace {

std::size_t bit_count(const BigInt& domain_size) {
  if (domain_size <= 1) return 0;
  const BigInt top = domain_size - 1;
  return boost::multiprecision::msb(top) + 1;
}

}  // namespace

IntegerEncoding build_integer_encoding(const std::string& source,
                                       const BigInt& a, const BigInt& c,
                                       VariableRegistry& registry,
                                       const std::string& bit_prefix) {
  if (a > c) {
    throw CompileError("integer variable '" + source + "' has empty range [" +
                       a.str() + ", " + c.str() + "]");
  }
  IntegerEncoding encoding;
  encoding.source = source;
  encoding.lower = a;
  encoding.upper = c;
  encoding.decode = PseudoBooleanPolynomial::constant(Rational(a));

  const std::size_t n = bit_count(c - a + 1);
  if (n == 0) return encoding;

  const BigInt b = a + (BigInt(1) << n) - 1 - c;
  BigInt weight = 1;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::string bit = registry.allocate(bit_prefix);
    registry.add_binary(bit);
    encoding.bits.push_back(bit);
    encoding.decode += PseudoBooleanPolynomial::variable(bit) * Rational(weight);
    weight <<= 1;
  }
  const std::string top = registry.allocate(bit_prefix);
  registry.add_binary(top);
  encoding.bits.push_back(top);
  const BigInt top_weight = (BigInt(1) << (n - 1)) - b;
  encoding.decode +=
      PseudoBooleanPolynomial::variable(top) * Rational(top_weight);
  return encoding;
}

IntegerEncoding encode_integer(const std::string& name, const BigInt& a,
                               const BigInt& c, VariableRegistry& registry) {
  registry.reserve(name);
  IntegerEncoding encoding = build_integer_encoding(name, a, c, registry, "x");
  registry.add_integer_encoding(encoding);
  return encoding;
}

OneHotEncoding encode_categorical(const std::string& name,
                                  const std::vector<std::string>& levels,
                                  VariableRegistry& registry) {
  if (levels.size() < 2) {
    throw CompileError("categorical variable '" + name +
                       "' needs at least 2 levels");
  }
  const std::set<std::string> unique(levels.begin(), levels.end());
  if (unique.size() != levels.size()) {
    throw CompileError("categorical variable '" + name +
                       "' has duplicate levels");
  }
  registry.reserve(name);
  OneHotEncoding encoding;
  encoding.source = name;
  encoding.levels = levels;
  encoding.constraint = PseudoBooleanPolynomial::constant(-1);
  for (const std::string& level : levels) {
    const std::string indicator = name + "=" + level;
    registry.add_binary(indicator);
    encoding.indicators.push_back(indicator);
    encoding.constraint += PseudoBooleanPolynomial::variable(indicator);
  }
  registry.add_categorical_encoding(encoding);
  return encoding;
}

PermutationEncoding encode_permutation(const std::string& name, std::size_t n,
                                       VariableRegistry& registry) {
  if (n == 0) {
    throw CompileError("permutation variable '" + name + "' has size 0");
  }
  registry.reserve(name);
  PermutationEncoding encoding;
  encoding.source = name;
  encoding.size = n;
  encoding.vars.assign(n, std::vector<std::string>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::string var = name + "[" + std::to_string(j + 1) +
                              "]=" + std::to_string(k + 1);
      registry.add_binary(var);
      encoding.vars[j][k] = var;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    PseudoBooleanPolynomial row = PseudoBooleanPolynomial::constant(-1);
    for (std::size_t k = 0; k < n; ++k) {
      row += PseudoBooleanPolynomial::variable(encoding.vars[j][k]);
    }
    encoding.row_constraints.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < n; ++k) {
    PseudoBooleanPolynomial column = PseudoBooleanPolynomial::constant(-1);
    for (std::size_t j = 0; j < n; ++j) {
      column += PseudoBooleanPolynomial::variable(encoding.vars[j][k]);
    }
    encoding.column_constraints.push_back(std::move(column));
  }
  registry.add_permutation_encoding(encoding);
  return encoding;
}

IversonExpr IversonExpr::eq_level(std::string variable, std::string level) {
  IversonExpr expr(Kind::EqLevel);
  expr.variable_ = std::move(variable);
  expr.level_ = std::move(level);
  return expr;
}

IversonExpr IversonExpr::eq_vars(std::string lhs, std::string rhs) {
  IversonExpr expr(Kind::EqVars);
  expr.variable_ = std::move(lhs);
  expr.level_ = std::move(rhs);
  return expr;
}

IversonExpr IversonExpr::and_(IversonExpr a, IversonExpr b) {
  IversonExpr expr(Kind::And);
  expr.children_.push_back(std::move(a));
  expr.children_.push_back(std::move(b));
  return expr;
}

IversonExpr IversonExpr::or_(IversonExpr a, IversonExpr b) {
  IversonExpr expr(Kind::Or);
  expr.children_.push_back(std::move(a));
  expr.children_.push_back(std::move(b));
  return expr;
}

IversonExpr IversonExpr::not_(IversonExpr a) {
  IversonExpr expr(Kind::Not);
  expr.children_.push_back(std::move(a));
  return expr;
}

namespace {

const OneHotEncoding& categorical_or_throw(const VariableRegistry& registry,
                                           const std::string& name) {
  const OneHotEncoding* encoding = registry.find_categorical(name);
  if (encoding == nullptr) {
    throw CompileError("predicate references unknown categorical variable '" +
                       name + "'");
  }
  return *encoding;
}

}  // namespace

PseudoBooleanPolynomial expand_iverson(const IversonExpr& expr,
                                       const VariableRegistry& registry) {
  switch (expr.kind()) {
    case IversonExpr::Kind::EqLevel: {
      const OneHotEncoding& encoding =
          categorical_or_throw(registry, expr.variable());
      const auto it = std::find(encoding.levels.begin(), encoding.levels.end(),
                                expr.level());
      if (it == encoding.levels.end()) {
        throw CompileError("variable '" + expr.variable() + "' has no level '" +
                           expr.level() + "'");
      }
      const std::size_t index = it - encoding.levels.begin();
      return PseudoBooleanPolynomial::variable(encoding.indicators[index]);
    }
    case IversonExpr::Kind::EqVars: {
      const OneHotEncoding& lhs =
          categorical_or_throw(registry, expr.variable());
      const OneHotEncoding& rhs =
          categorical_or_throw(registry, expr.other_variable());
      PseudoBooleanPolynomial sum;
      for (std::size_t i = 0; i < lhs.levels.size(); ++i) {
        const auto it = std::find(rhs.levels.begin(), rhs.levels.end(),
                                  lhs.levels[i]);
        if (it == rhs.levels.end()) continue;
        const std::size_t j = it - rhs.levels.begin();
        sum += PseudoBooleanPolynomial::monomial(
            {lhs.indicators[i], rhs.indicators[j]}, 1);
      }
      return sum;
    }
    case IversonExpr::Kind::Not:
      return PseudoBooleanPolynomial::constant(1) -
             expand_iverson(expr.children()[0], registry);
    case IversonExpr::Kind::And:
      return expand_iverson(expr.children()[0], registry) *
             expand_iverson(expr.children()[1], registry);
    case IversonExpr::Kind::Or: {
      const PseudoBooleanPolynomial p =
          expand_iverson(expr.children()[0], registry);
      const PseudoBooleanPolynomial q =
          expand_iverson(expr.children()[1], registry);
      return p + q - p * q;
    }
  }
  std::abort();
}

PseudoBooleanPolynomial maxsat_objective(const std::vector<Clause>& clauses) {
  if (clauses.empty()) {
    throw CompileError("clause list is empty");
  }
  PseudoBooleanPolynomial total;
  for (std::size_t index = 0; index < clauses.size(); ++index) {
    const Clause& clause = clauses[index];
    if (clause.empty()) {
      throw CompileError("clause " + std::to_string(index + 1) + " is empty");
    }
    std::set<int> seen;
    PseudoBooleanPolynomial product = PseudoBooleanPolynomial::constant(1);
    for (const int literal : clause) {
      if (literal == 0) {
        throw CompileError("clause " + std::to_string(index + 1) +
                           " contains literal 0");
      }
      if (seen.count(-literal) != 0) {
        throw TautologicalClauseError(index + 1,
                                      "x" + std::to_string(std::abs(literal)));
      }
      if (!seen.insert(literal).second) continue;
      const std::string name = "x" + std::to_string(std::abs(literal));
      const PseudoBooleanPolynomial x = PseudoBooleanPolynomial::variable(name);
      if (literal > 0) {
        product *= PseudoBooleanPolynomial::constant(1) - x;
      } else {
        product *= x;
      }
    }
    total += product;
  }
  return total;
}

}  // namespace quboc
