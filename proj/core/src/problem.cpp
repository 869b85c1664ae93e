#include "quboc/problem.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quboc/errors.hpp"

namespace quboc {
namespace {

using ordered_json = nlohmann::ordered_json;

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  const unsigned char head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && name.front() != '_') return false;
  for (const char c : name) {
    const unsigned char uc = static_cast<unsigned char>(c);
    if (!std::isalnum(uc) && c != '_') return false;
  }
  return true;
}

bool all_digits(const std::string& text) {
  if (text.empty()) return false;
  for (const char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(const std::string& where, const std::string& message) {
  throw ParseError(where + ": " + message);
}

using DeclMap = std::map<std::string, const VariableDecl*>;

void check_reference(const std::string& ref, const DeclMap& decls,
                     const std::string& where) {
  const std::size_t eq = ref.find('=');
  if (eq == std::string::npos) {
    const auto it = decls.find(ref);
    if (it == decls.end()) fail(where, "undeclared variable '" + ref + "'");
    const VariableDecl& decl = *it->second;
    if (decl.kind == VariableDecl::Kind::Categorical) {
      fail(where, "categorical variable '" + ref +
                      "' cannot appear in a polynomial; reference an "
                      "indicator such as '" +
                      ref + "=" + decl.levels.front() + "'");
    }
    if (decl.kind == VariableDecl::Kind::Permutation) {
      fail(where, "permutation variable '" + ref +
                      "' cannot appear in a polynomial; reference a cell "
                      "such as '" +
                      ref + "[1]=1'");
    }
    return;
  }

  const std::string left = ref.substr(0, eq);
  const std::string right = ref.substr(eq + 1);
  const std::size_t bracket = left.find('[');
  if (bracket == std::string::npos) {
    const auto it = decls.find(left);
    if (it == decls.end() ||
        it->second->kind != VariableDecl::Kind::Categorical) {
      fail(where, "'" + ref + "' does not name a categorical indicator");
    }
    const auto& levels = it->second->levels;
    if (std::find(levels.begin(), levels.end(), right) == levels.end()) {
      fail(where, "variable '" + left + "' has no level '" + right + "'");
    }
    return;
  }

  if (left.size() < bracket + 2 || left.back() != ']') {
    fail(where, "malformed reference '" + ref + "'");
  }
  const std::string name = left.substr(0, bracket);
  const std::string position = left.substr(bracket + 1, left.size() - bracket - 2);
  const auto it = decls.find(name);
  if (it == decls.end() ||
      it->second->kind != VariableDecl::Kind::Permutation) {
    fail(where, "'" + ref + "' does not name a permutation cell");
  }
  if (!all_digits(position) || !all_digits(right)) {
    fail(where, "malformed reference '" + ref + "'");
  }
  unsigned long j = 0;
  unsigned long k = 0;
  try {
    j = std::stoul(position);
    k = std::stoul(right);
  } catch (const std::out_of_range&) {
    fail(where, "cell indices in '" + ref + "' are too large");
  }
  const std::size_t n = it->second->size;
  if (j < 1 || j > n || k < 1 || k > n) {
    fail(where, "cell indices in '" + ref + "' fall outside 1.." +
                    std::to_string(n));
  }
}

void check_polynomial(const IntegerPolynomial& poly, const DeclMap& decls,
                      const std::string& where) {
  for (const auto& [exponents, coefficient] : poly.terms()) {
    (void)coefficient;
    for (const auto& [ref, exponent] : exponents) {
      if (exponent < 1) {
        fail(where, "exponent of '" + ref + "' must be >= 1");
      }
      check_reference(ref, decls, where);
    }
  }
}

void check_predicate(const IversonExpr& expr, const DeclMap& decls,
                     const std::string& where) {
  const auto categorical = [&](const std::string& name) -> const VariableDecl& {
    const auto it = decls.find(name);
    if (it == decls.end() ||
        it->second->kind != VariableDecl::Kind::Categorical) {
      fail(where, "'" + name + "' is not a declared categorical variable");
    }
    return *it->second;
  };
  switch (expr.kind()) {
    case IversonExpr::Kind::EqLevel: {
      const VariableDecl& decl = categorical(expr.variable());
      const auto& levels = decl.levels;
      if (std::find(levels.begin(), levels.end(), expr.level()) ==
          levels.end()) {
        fail(where, "variable '" + expr.variable() + "' has no level '" +
                        expr.level() + "'");
      }
      return;
    }
    case IversonExpr::Kind::EqVars:
      categorical(expr.variable());
      categorical(expr.other_variable());
      return;
    case IversonExpr::Kind::Not:
    case IversonExpr::Kind::And:
    case IversonExpr::Kind::Or:
      for (const IversonExpr& child : expr.children()) {
        check_predicate(child, decls, where);
      }
      return;
  }
}

// --- JSON helpers ---------------------------------------------------------

void check_keys(const ordered_json& object,
                const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    if (!allowed.count(key)) fail(where, "unknown field '" + key + "'");
  }
}

const ordered_json& require_field(const ordered_json& object, const char* key,
                                  const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const ordered_json& value, const std::string& where) {
  if (!value.is_string()) fail(where, "expected a string");
  return value.get<std::string>();
}

const ordered_json& require_object(const ordered_json& value,
                                   const std::string& where) {
  if (!value.is_object()) fail(where, "expected an object");
  return value;
}

const ordered_json& require_array(const ordered_json& value,
                                  const std::string& where) {
  if (!value.is_array()) fail(where, "expected an array");
  return value;
}

BigInt bigint_from_json(const ordered_json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return BigInt(value.get<long long>());
  }
  if (value.is_number_unsigned()) {
    return BigInt(value.get<unsigned long long>());
  }
  if (value.is_string()) {
    std::string text = value.get<std::string>();
    std::string digits = text;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
      digits.erase(digits.begin());
    }
    if (!all_digits(digits)) fail(where, "malformed integer '" + text + "'");
    return BigInt(text);
  }
  fail(where, "expected an integer or an integer string");
}

Rational rational_from_json(const ordered_json& value,
                            const std::string& where) {
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  if (value.is_number_unsigned()) {
    return Rational(value.get<unsigned long long>());
  }
  if (value.is_string()) {
    try {
      return rational_from_string(value.get<std::string>());
    } catch (const std::invalid_argument& error) {
      fail(where, error.what());
    }
  }
  if (value.is_number_float()) {
    fail(where,
         "floating-point coefficients are not accepted; use an integer or a "
         "rational string such as \"-3/2\"");
  }
  fail(where, "expected an integer or a rational string");
}

IntegerPolynomial terms_from_json(const ordered_json& value,
                                  const std::string& where) {
  const ordered_json& terms = require_array(value, where);
  IntegerPolynomial poly;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string term_where = where + "[" + std::to_string(i) + "]";
    const ordered_json& term = require_object(terms[i], term_where);
    check_keys(term, {"coefficient", "powers"}, term_where);
    const Rational coefficient = rational_from_json(
        require_field(term, "coefficient", term_where),
        term_where + ".coefficient");
    IntegerPolynomial::ExponentMap exponents;
    if (term.contains("powers")) {
      const ordered_json& powers =
          require_object(term["powers"], term_where + ".powers");
      for (const auto& [ref, raw] : powers.items()) {
        const std::string power_where = term_where + ".powers['" + ref + "']";
        if (!raw.is_number_integer() && !raw.is_number_unsigned()) {
          fail(power_where, "expected a positive integer exponent");
        }
        const long long exponent = raw.get<long long>();
        if (exponent < 1) fail(power_where, "exponent must be >= 1");
        exponents[ref] = static_cast<unsigned>(exponent);
      }
    }
    poly += IntegerPolynomial::monomial(exponents, coefficient);
  }
  return poly;
}

IntegerPolynomial polynomial_from_json(const ordered_json& value,
                                       const std::string& where) {
  const ordered_json& object = require_object(value, where);
  check_keys(object, {"terms"}, where);
  return terms_from_json(require_field(object, "terms", where),
                         where + ".terms");
}

IversonExpr predicate_from_json(const ordered_json& value,
                                const std::string& where) {
  const ordered_json& object = require_object(value, where);
  const std::string op =
      require_string(require_field(object, "op", where), where + ".op");
  if (op == "eq_level") {
    check_keys(object, {"op", "variable", "level"}, where);
    return IversonExpr::eq_level(
        require_string(require_field(object, "variable", where),
                       where + ".variable"),
        require_string(require_field(object, "level", where),
                       where + ".level"));
  }
  if (op == "eq_vars") {
    check_keys(object, {"op", "first", "second"}, where);
    return IversonExpr::eq_vars(
        require_string(require_field(object, "first", where),
                       where + ".first"),
        require_string(require_field(object, "second", where),
                       where + ".second"));
  }
  if (op == "not") {
    check_keys(object, {"op", "argument"}, where);
    return IversonExpr::not_(predicate_from_json(
        require_field(object, "argument", where), where + ".argument"));
  }
  if (op == "and" || op == "or") {
    check_keys(object, {"op", "arguments"}, where);
    const ordered_json& arguments = require_array(
        require_field(object, "arguments", where), where + ".arguments");
    if (arguments.size() < 2) {
      fail(where + ".arguments", "expected at least two arguments");
    }
    IversonExpr result = predicate_from_json(
        arguments[0], where + ".arguments[0]");
    for (std::size_t i = 1; i < arguments.size(); ++i) {
      IversonExpr next = predicate_from_json(
          arguments[i], where + ".arguments[" + std::to_string(i) + "]");
      result = op == "and" ? IversonExpr::and_(std::move(result), std::move(next))
                           : IversonExpr::or_(std::move(result), std::move(next));
    }
    return result;
  }
  fail(where, "unknown op '" + op + "'");
}

VariableDecl variable_from_json(const ordered_json& value,
                                const std::string& where) {
  const ordered_json& object = require_object(value, where);
  const std::string kind =
      require_string(require_field(object, "kind", where), where + ".kind");
  const std::string name =
      require_string(require_field(object, "name", where), where + ".name");
  if (kind == "bool") {
    check_keys(object, {"kind", "name"}, where);
    return VariableDecl::boolean(name);
  }
  if (kind == "int") {
    check_keys(object, {"kind", "name", "lower", "upper"}, where);
    return VariableDecl::integer(
        name,
        bigint_from_json(require_field(object, "lower", where),
                         where + ".lower"),
        bigint_from_json(require_field(object, "upper", where),
                         where + ".upper"));
  }
  if (kind == "categorical") {
    check_keys(object, {"kind", "name", "levels"}, where);
    const ordered_json& levels = require_array(
        require_field(object, "levels", where), where + ".levels");
    std::vector<std::string> parsed;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      parsed.push_back(require_string(
          levels[i], where + ".levels[" + std::to_string(i) + "]"));
    }
    return VariableDecl::categorical(name, std::move(parsed));
  }
  if (kind == "permutation") {
    check_keys(object, {"kind", "name", "size"}, where);
    const ordered_json& size = require_field(object, "size", where);
    if (!size.is_number_integer() && !size.is_number_unsigned()) {
      fail(where + ".size", "expected a positive integer");
    }
    const long long n = size.get<long long>();
    if (n < 1) fail(where + ".size", "expected a positive integer");
    return VariableDecl::permutation(name, static_cast<std::size_t>(n));
  }
  fail(where + ".kind", "unknown kind '" + kind + "'");
}

std::vector<Clause> clauses_from_json(const ordered_json& value,
                                      const std::string& where) {
  const ordered_json& array = require_array(value, where);
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < array.size(); ++i) {
    const std::string clause_where = where + "[" + std::to_string(i) + "]";
    const ordered_json& entry = require_array(array[i], clause_where);
    Clause clause;
    for (std::size_t j = 0; j < entry.size(); ++j) {
      const ordered_json& literal = entry[j];
      if (!literal.is_number_integer() && !literal.is_number_unsigned()) {
        fail(clause_where + "[" + std::to_string(j) + "]",
             "expected an integer literal");
      }
      const long long value_ll = literal.get<long long>();
      if (value_ll < std::numeric_limits<int>::min() ||
          value_ll > std::numeric_limits<int>::max()) {
        fail(clause_where + "[" + std::to_string(j) + "]",
             "literal magnitude too large");
      }
      clause.push_back(static_cast<int>(value_ll));
    }
    clauses.push_back(std::move(clause));
  }
  return clauses;
}

// --- JSON printing --------------------------------------------------------

ordered_json polynomial_to_json(const IntegerPolynomial& poly) {
  ordered_json terms = ordered_json::array();
  for (const auto& [exponents, coefficient] : poly.terms()) {
    ordered_json term;
    term["coefficient"] = to_string(coefficient);
    if (!exponents.empty()) {
      ordered_json powers = ordered_json::object();
      for (const auto& [ref, exponent] : exponents) {
        powers[ref] = exponent;
      }
      term["powers"] = std::move(powers);
    }
    terms.push_back(std::move(term));
  }
  ordered_json object;
  object["terms"] = std::move(terms);
  return object;
}

ordered_json predicate_to_json(const IversonExpr& expr) {
  ordered_json object;
  switch (expr.kind()) {
    case IversonExpr::Kind::EqLevel:
      object["op"] = "eq_level";
      object["variable"] = expr.variable();
      object["level"] = expr.level();
      return object;
    case IversonExpr::Kind::EqVars:
      object["op"] = "eq_vars";
      object["first"] = expr.variable();
      object["second"] = expr.other_variable();
      return object;
    case IversonExpr::Kind::Not:
      object["op"] = "not";
      object["argument"] = predicate_to_json(expr.children()[0]);
      return object;
    case IversonExpr::Kind::And:
    case IversonExpr::Kind::Or: {
      object["op"] = expr.kind() == IversonExpr::Kind::And ? "and" : "or";
      ordered_json arguments = ordered_json::array();
      for (const IversonExpr& child : expr.children()) {
        arguments.push_back(predicate_to_json(child));
      }
      object["arguments"] = std::move(arguments);
      return object;
    }
  }
  std::abort();
}

ordered_json variable_to_json(const VariableDecl& decl) {
  ordered_json object;
  switch (decl.kind) {
    case VariableDecl::Kind::Bool:
      object["kind"] = "bool";
      object["name"] = decl.name;
      return object;
    case VariableDecl::Kind::Integer:
      object["kind"] = "int";
      object["name"] = decl.name;
      object["lower"] = decl.lower.str();
      object["upper"] = decl.upper.str();
      return object;
    case VariableDecl::Kind::Categorical:
      object["kind"] = "categorical";
      object["name"] = decl.name;
      object["levels"] = decl.levels;
      return object;
    case VariableDecl::Kind::Permutation:
      object["kind"] = "permutation";
      object["name"] = decl.name;
      object["size"] = decl.size;
      return object;
  }
  std::abort();
}

}  // namespace

VariableDecl VariableDecl::boolean(std::string name) {
  VariableDecl decl;
  decl.name = std::move(name);
  decl.kind = Kind::Bool;
  return decl;
}

VariableDecl VariableDecl::integer(std::string name, BigInt lower,
                                   BigInt upper) {
  VariableDecl decl;
  decl.name = std::move(name);
  decl.kind = Kind::Integer;
  decl.lower = std::move(lower);
  decl.upper = std::move(upper);
  return decl;
}

VariableDecl VariableDecl::categorical(std::string name,
                                       std::vector<std::string> levels) {
  VariableDecl decl;
  decl.name = std::move(name);
  decl.kind = Kind::Categorical;
  decl.levels = std::move(levels);
  return decl;
}

VariableDecl VariableDecl::permutation(std::string name, std::size_t size) {
  VariableDecl decl;
  decl.name = std::move(name);
  decl.kind = Kind::Permutation;
  decl.size = size;
  return decl;
}

void validate_problem(const ProblemSpec& spec) {
  DeclMap decls;
  std::size_t bool_count = 0;
  for (std::size_t i = 0; i < spec.variables.size(); ++i) {
    const VariableDecl& decl = spec.variables[i];
    const std::string where = "variables[" + std::to_string(i) + "]";
    if (!is_identifier(decl.name)) {
      fail(where, "invalid variable name '" + decl.name +
                      "' (letters, digits, and underscores only, starting "
                      "with a letter or underscore)");
    }
    if (decls.count(decl.name)) {
      fail(where, "duplicate variable name '" + decl.name + "'");
    }
    switch (decl.kind) {
      case VariableDecl::Kind::Bool:
        ++bool_count;
        break;
      case VariableDecl::Kind::Integer:
        if (decl.lower > decl.upper) {
          fail(where, "lower bound " + decl.lower.str() +
                          " exceeds upper bound " + decl.upper.str());
        }
        break;
      case VariableDecl::Kind::Categorical: {
        if (decl.levels.size() < 2) {
          fail(where, "categorical variable '" + decl.name +
                          "' needs at least two levels");
        }
        std::set<std::string> seen;
        for (const std::string& level : decl.levels) {
          if (level.empty() || level.find('=') != std::string::npos) {
            fail(where, "invalid level '" + level +
                            "' (levels are nonempty and may not contain "
                            "'=')");
          }
          if (!seen.insert(level).second) {
            fail(where, "duplicate level '" + level + "'");
          }
        }
        break;
      }
      case VariableDecl::Kind::Permutation:
        if (decl.size < 1) {
          fail(where, "permutation variable '" + decl.name +
                          "' needs a positive size");
        }
        break;
    }
    decls[decl.name] = &decl;
  }

  switch (spec.objective_kind) {
    case ObjectiveKind::Polynomial:
      check_polynomial(spec.objective, decls, "objective");
      break;
    case ObjectiveKind::Clauses: {
      if (spec.clauses.empty()) fail("objective.clauses", "clause list is empty");
      for (std::size_t i = 0; i < spec.clauses.size(); ++i) {
        const std::string where =
            "objective.clauses[" + std::to_string(i) + "]";
        if (spec.clauses[i].empty()) fail(where, "empty clause");
        for (const int literal : spec.clauses[i]) {
          if (literal == 0) fail(where, "literal 0 is not allowed");
          const std::size_t index =
              static_cast<std::size_t>(literal < 0 ? -static_cast<long long>(literal)
                                                   : literal);
          if (index > bool_count) {
            fail(where, "literal " + std::to_string(literal) +
                            " out of range (" + std::to_string(bool_count) +
                            " bool variables declared)");
          }
        }
      }
      break;
    }
    case ObjectiveKind::Iverson:
      if (!spec.predicate.has_value()) {
        fail("objective", "missing predicate expression");
      }
      check_predicate(*spec.predicate, decls, "objective.expression");
      break;
  }

  for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
    check_polynomial(spec.constraints[i].polynomial, decls,
                     "constraints[" + std::to_string(i) + "]");
  }
}

ProblemSpec parse_problem_text(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw ParseError(std::string("invalid JSON: ") + error.what());
  }
  require_object(root, "problem");
  check_keys(root,
             {"format_version", "name", "sense", "variables", "objective",
              "constraints"},
             "problem");
  if (root.contains("format_version")) {
    const ordered_json& version = root["format_version"];
    if (!version.is_number_integer() || version.get<long long>() != 1) {
      fail("format_version", "unsupported value (expected 1)");
    }
  }

  ProblemSpec spec;
  if (root.contains("name")) {
    spec.name = require_string(root["name"], "name");
  }
  if (root.contains("sense")) {
    const std::string sense = require_string(root["sense"], "sense");
    if (sense == "min") {
      spec.sense = Sense::Minimize;
    } else if (sense == "max") {
      spec.sense = Sense::Maximize;
    } else {
      fail("sense", "expected \"min\" or \"max\", got \"" + sense + "\"");
    }
  }

  const ordered_json& variables = require_array(
      require_field(root, "variables", "problem"), "variables");
  for (std::size_t i = 0; i < variables.size(); ++i) {
    spec.variables.push_back(variable_from_json(
        variables[i], "variables[" + std::to_string(i) + "]"));
  }

  const ordered_json& objective =
      require_object(require_field(root, "objective", "problem"), "objective");
  const std::string kind = require_string(
      require_field(objective, "kind", "objective"), "objective.kind");
  if (kind == "polynomial") {
    check_keys(objective, {"kind", "terms"}, "objective");
    spec.objective_kind = ObjectiveKind::Polynomial;
    spec.objective = terms_from_json(
        require_field(objective, "terms", "objective"), "objective.terms");
  } else if (kind == "clauses") {
    check_keys(objective, {"kind", "clauses"}, "objective");
    spec.objective_kind = ObjectiveKind::Clauses;
    spec.clauses = clauses_from_json(
        require_field(objective, "clauses", "objective"), "objective.clauses");
  } else if (kind == "iverson") {
    check_keys(objective, {"kind", "expression"}, "objective");
    spec.objective_kind = ObjectiveKind::Iverson;
    spec.predicate = predicate_from_json(
        require_field(objective, "expression", "objective"),
        "objective.expression");
  } else {
    fail("objective.kind", "unknown kind '" + kind + "'");
  }

  if (root.contains("constraints")) {
    const ordered_json& constraints =
        require_array(root["constraints"], "constraints");
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      const std::string where = "constraints[" + std::to_string(i) + "]";
      const ordered_json& entry = require_object(constraints[i], where);
      check_keys(entry, {"relation", "polynomial"}, where);
      Constraint constraint;
      const std::string relation = require_string(
          require_field(entry, "relation", where), where + ".relation");
      if (relation == "==0") {
        constraint.relation = Relation::EqualsZero;
      } else if (relation == "<=0") {
        constraint.relation = Relation::AtMostZero;
      } else {
        fail(where + ".relation",
             "expected \"==0\" or \"<=0\", got \"" + relation + "\"");
      }
      constraint.polynomial = polynomial_from_json(
          require_field(entry, "polynomial", where), where + ".polynomial");
      spec.constraints.push_back(std::move(constraint));
    }
  }

  validate_problem(spec);
  return spec;
}

ProblemSpec parse_problem_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw ParseError("cannot open problem file: " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_problem_text(buffer.str());
}

std::string print_problem(const ProblemSpec& spec) {
  ordered_json root;
  root["format_version"] = 1;
  if (!spec.name.empty()) root["name"] = spec.name;
  root["sense"] = spec.sense == Sense::Minimize ? "min" : "max";
  ordered_json variables = ordered_json::array();
  for (const VariableDecl& decl : spec.variables) {
    variables.push_back(variable_to_json(decl));
  }
  root["variables"] = std::move(variables);

  ordered_json objective;
  switch (spec.objective_kind) {
    case ObjectiveKind::Polynomial: {
      objective["kind"] = "polynomial";
      objective["terms"] = polynomial_to_json(spec.objective)["terms"];
      break;
    }
    case ObjectiveKind::Clauses:
      objective["kind"] = "clauses";
      objective["clauses"] = spec.clauses;
      break;
    case ObjectiveKind::Iverson:
      objective["kind"] = "iverson";
      objective["expression"] = predicate_to_json(*spec.predicate);
      break;
  }
  root["objective"] = std::move(objective);

  if (!spec.constraints.empty()) {
    ordered_json constraints = ordered_json::array();
    for (const Constraint& constraint : spec.constraints) {
      ordered_json entry;
      entry["relation"] =
          constraint.relation == Relation::EqualsZero ? "==0" : "<=0";
      entry["polynomial"] = polynomial_to_json(constraint.polynomial);
      constraints.push_back(std::move(entry));
    }
    root["constraints"] = std::move(constraints);
  }
  return root.dump(2) + "\n";
}

DimacsInstance parse_dimacs_text(const std::string& text, bool strict) {
  DimacsInstance out;
  bool header_seen = false;
  std::size_t declared_clauses = 0;
  Clause current;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_number = 0;

  const auto line_fail = [&](const std::string& message) {
    throw ParseError("line " + std::to_string(line_number) + ": " + message);
  };

  while (std::getline(stream, line)) {
    ++line_number;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == 'p') {
      if (header_seen) line_fail("duplicate 'p cnf' header");
      std::istringstream fields(line.substr(first));
      std::string p, format;
      long long variable_count = -1;
      long long clause_count = -1;
      std::string extra;
      fields >> p >> format >> variable_count >> clause_count;
      if (p != "p" || format != "cnf" || fields.fail() || variable_count < 0 ||
          clause_count < 0 || (fields >> extra)) {
        line_fail("malformed header (expected 'p cnf <variables> <clauses>')");
      }
      if (variable_count > std::numeric_limits<int>::max()) {
        line_fail("variable count too large");
      }
      header_seen = true;
      out.variable_count = static_cast<std::size_t>(variable_count);
      declared_clauses = static_cast<std::size_t>(clause_count);
      continue;
    }

    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      if (!header_seen) line_fail("clause data before the 'p cnf' header");
      std::string digits = token;
      if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
        digits.erase(digits.begin());
      }
      if (!all_digits(digits)) line_fail("invalid token '" + token + "'");
      long long literal = 0;
      try {
        literal = std::stoll(token);
      } catch (const std::out_of_range&) {
        line_fail("literal '" + token + "' out of range");
      }
      if (literal == 0) {
        if (current.empty()) line_fail("empty clause");
        out.clauses.push_back(current);
        current.clear();
        continue;
      }
      const long long magnitude = literal < 0 ? -literal : literal;
      if (magnitude > static_cast<long long>(out.variable_count)) {
        line_fail("literal " + token + " out of range (header declares " +
                  std::to_string(out.variable_count) + " variables)");
      }
      current.push_back(static_cast<int>(literal));
    }
  }

  if (!current.empty()) {
    throw ParseError("unterminated clause at end of input (missing closing 0)");
  }
  if (!header_seen) throw ParseError("missing 'p cnf' header");
  if (out.clauses.size() != declared_clauses) {
    const std::string message =
        "header declares " + std::to_string(declared_clauses) +
        " clauses but " + std::to_string(out.clauses.size()) + " were read";
    if (strict) throw ParseError(message);
    out.warnings.push_back(message);
  }
  return out;
}

DimacsInstance parse_dimacs_file(const std::string& path, bool strict) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw ParseError("cannot open CNF file: " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_dimacs_text(buffer.str(), strict);
}

ProblemSpec problem_from_dimacs(const DimacsInstance& instance) {
  ProblemSpec spec;
  spec.sense = Sense::Minimize;
  spec.objective_kind = ObjectiveKind::Clauses;
  for (std::size_t j = 1; j <= instance.variable_count; ++j) {
    spec.variables.push_back(VariableDecl::boolean("x" + std::to_string(j)));
  }
  spec.clauses = instance.clauses;
  return spec;
}

}  // namespace quboc
