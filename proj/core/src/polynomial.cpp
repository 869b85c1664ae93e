#include "quboc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quboc/errors.hpp"

namespace quboc {
namespace {

/// Orders "x2" before "x10": digit runs compare numerically, everything else
/// character by character.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const unsigned char ca = static_cast<unsigned char>(a[i]);
    const unsigned char cb = static_cast<unsigned char>(b[j]);
    if (std::isdigit(ca) && std::isdigit(cb)) {
      std::size_t ia = i;
      std::size_t jb = j;
      while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
      while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
      const std::string da = a.substr(i, ia - i);
      const std::string db = b.substr(j, jb - j);
      const std::string ta = da.substr(da.find_first_not_of('0') == std::string::npos
                                           ? da.size() - 1
                                           : da.find_first_not_of('0'));
      const std::string tb = db.substr(db.find_first_not_of('0') == std::string::npos
                                           ? db.size() - 1
                                           : db.find_first_not_of('0'));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = ia;
      j = jb;
      continue;
    }
    if (ca != cb) return ca < cb;
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

std::string format_coefficient(const Rational& magnitude, bool has_vars) {
  if (has_vars && magnitude == 1) return "";
  return to_string(magnitude);
}

}  // namespace

PseudoBooleanPolynomial PseudoBooleanPolynomial::constant(const Rational& value) {
  PseudoBooleanPolynomial p;
  p.add_term({}, value);
  return p;
}

PseudoBooleanPolynomial PseudoBooleanPolynomial::variable(const std::string& name) {
  PseudoBooleanPolynomial p;
  p.add_term({name}, 1);
  return p;
}

PseudoBooleanPolynomial PseudoBooleanPolynomial::monomial(
    const std::vector<std::string>& names, const Rational& coefficient) {
  TermKey key = names;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  PseudoBooleanPolynomial p;
  p.add_term(std::move(key), coefficient);
  return p;
}

PseudoBooleanPolynomial PseudoBooleanPolynomial::from_terms(const TermMap& terms) {
  PseudoBooleanPolynomial p;
  for (const auto& [key, coefficient] : terms) {
    TermKey sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    p.add_term(std::move(sorted), coefficient);
  }
  return p;
}

void PseudoBooleanPolynomial::add_term(TermKey key, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(key), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational PseudoBooleanPolynomial::coefficient(const TermKey& key) const {
  TermKey sorted = key;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto it = terms_.find(sorted);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational PseudoBooleanPolynomial::constant_term() const {
  const auto it = terms_.find(TermKey{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t PseudoBooleanPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [key, coefficient] : terms_) {
    d = std::max(d, key.size());
  }
  return d;
}

std::set<std::string> PseudoBooleanPolynomial::variables() const {
  std::set<std::string> names;
  for (const auto& [key, coefficient] : terms_) {
    names.insert(key.begin(), key.end());
  }
  return names;
}

PseudoBooleanPolynomial& PseudoBooleanPolynomial::operator+=(
    const PseudoBooleanPolynomial& other) {
  for (const auto& [key, coefficient] : other.terms_) {
    add_term(key, coefficient);
  }
  return *this;
}

PseudoBooleanPolynomial& PseudoBooleanPolynomial::operator-=(
    const PseudoBooleanPolynomial& other) {
  for (const auto& [key, coefficient] : other.terms_) {
    add_term(key, -coefficient);
  }
  return *this;
}

PseudoBooleanPolynomial& PseudoBooleanPolynomial::operator*=(
    const PseudoBooleanPolynomial& other) {
  TermMap product;
  for (const auto& [lhs_key, lhs_coefficient] : terms_) {
    for (const auto& [rhs_key, rhs_coefficient] : other.terms_) {
      TermKey merged;
      merged.reserve(lhs_key.size() + rhs_key.size());
      std::set_union(lhs_key.begin(), lhs_key.end(), rhs_key.begin(),
                     rhs_key.end(), std::back_inserter(merged));
      const Rational contribution = lhs_coefficient * rhs_coefficient;
      auto [it, inserted] = product.emplace(std::move(merged), contribution);
      if (!inserted) it->second += contribution;
    }
  }
  terms_.clear();
  for (auto& [key, coefficient] : product) {
    if (coefficient != 0) terms_.emplace(key, std::move(coefficient));
  }
  return *this;
}

PseudoBooleanPolynomial& PseudoBooleanPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coefficient] : terms_) {
    coefficient *= scalar;
  }
  return *this;
}

PseudoBooleanPolynomial PseudoBooleanPolynomial::operator-() const {
  PseudoBooleanPolynomial negated = *this;
  for (auto& [key, coefficient] : negated.terms_) {
    coefficient = -coefficient;
  }
  return negated;
}

PseudoBooleanPolynomial PseudoBooleanPolynomial::substitute(
    const std::string& name, const PseudoBooleanPolynomial& replacement) const {
  PseudoBooleanPolynomial untouched;
  PseudoBooleanPolynomial stripped;
  for (const auto& [key, coefficient] : terms_) {
    const auto it = std::lower_bound(key.begin(), key.end(), name);
    if (it != key.end() && *it == name) {
      TermKey rest;
      rest.reserve(key.size() - 1);
      rest.insert(rest.end(), key.begin(), it);
      rest.insert(rest.end(), it + 1, key.end());
      stripped.add_term(std::move(rest), coefficient);
    } else {
      untouched.add_term(key, coefficient);
    }
  }
  return untouched + stripped * replacement;
}

Rational PseudoBooleanPolynomial::evaluate(const Assignment& assignment) const {
  Rational total = 0;
  for (const auto& [key, coefficient] : terms_) {
    bool active = true;
    for (const std::string& name : key) {
      const auto it = assignment.find(name);
      if (it == assignment.end()) throw MissingVariableError(name);
      active = active && it->second;
    }
    if (active) total += coefficient;
  }
  return total;
}

Rational PseudoBooleanPolynomial::lower_bound() const {
  Rational bound = 0;
  for (const auto& [key, coefficient] : terms_) {
    if (key.empty()) {
      bound += coefficient;
    } else if (coefficient < 0) {
      bound += coefficient;
    }
  }
  return bound;
}

Rational PseudoBooleanPolynomial::upper_bound() const {
  Rational bound = 0;
  for (const auto& [key, coefficient] : terms_) {
    if (key.empty()) {
      bound += coefficient;
    } else if (coefficient > 0) {
      bound += coefficient;
    }
  }
  return bound;
}

std::string PseudoBooleanPolynomial::to_string() const {
  if (terms_.empty()) return "0";

  std::vector<const TermMap::value_type*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& entry : terms_) {
    ordered.push_back(&entry);
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size()) {
      return a->first.size() < b->first.size();
    }
    for (std::size_t i = 0; i < a->first.size(); ++i) {
      if (a->first[i] != b->first[i]) {
        return natural_less(a->first[i], b->first[i]);
      }
    }
    return false;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto* entry : ordered) {
    const auto& [key, coefficient] = *entry;
    const bool negative = coefficient < 0;
    const Rational magnitude = negative ? Rational(-coefficient) : coefficient;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const std::string coef_text = format_coefficient(magnitude, !key.empty());
    out << coef_text;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i > 0 || !coef_text.empty()) out << "*";
      out << key[i];
    }
  }
  return out.str();
}

IntegerPolynomial IntegerPolynomial::constant(const Rational& value) {
  IntegerPolynomial p;
  p.add_term({}, value);
  return p;
}

IntegerPolynomial IntegerPolynomial::variable(const std::string& name) {
  IntegerPolynomial p;
  p.add_term({{name, 1}}, 1);
  return p;
}

IntegerPolynomial IntegerPolynomial::monomial(const ExponentMap& exponents,
                                              const Rational& coefficient) {
  ExponentMap cleaned;
  for (const auto& [name, exponent] : exponents) {
    if (exponent > 0) cleaned.emplace(name, exponent);
  }
  IntegerPolynomial p;
  p.add_term(cleaned, coefficient);
  return p;
}

IntegerPolynomial IntegerPolynomial::from_terms(const TermMap& terms) {
  IntegerPolynomial p;
  for (const auto& [exponents, coefficient] : terms) {
    ExponentMap cleaned;
    for (const auto& [name, exponent] : exponents) {
      if (exponent > 0) cleaned.emplace(name, exponent);
    }
    p.add_term(cleaned, coefficient);
  }
  return p;
}

void IntegerPolynomial::add_term(const ExponentMap& exponents,
                                 const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t IntegerPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [exponents, coefficient] : terms_) {
    std::size_t total = 0;
    for (const auto& [name, exponent] : exponents) {
      total += exponent;
    }
    d = std::max(d, total);
  }
  return d;
}

std::set<std::string> IntegerPolynomial::variables() const {
  std::set<std::string> names;
  for (const auto& [exponents, coefficient] : terms_) {
    for (const auto& [name, exponent] : exponents) {
      names.insert(name);
    }
  }
  return names;
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& other) {
  for (const auto& [exponents, coefficient] : other.terms_) {
    add_term(exponents, coefficient);
  }
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& other) {
  for (const auto& [exponents, coefficient] : other.terms_) {
    add_term(exponents, -coefficient);
  }
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& other) {
  TermMap product;
  for (const auto& [lhs_exponents, lhs_coefficient] : terms_) {
    for (const auto& [rhs_exponents, rhs_coefficient] : other.terms_) {
      ExponentMap merged = lhs_exponents;
      for (const auto& [name, exponent] : rhs_exponents) {
        merged[name] += exponent;
      }
      const Rational contribution = lhs_coefficient * rhs_coefficient;
      auto [it, inserted] = product.emplace(std::move(merged), contribution);
      if (!inserted) it->second += contribution;
    }
  }
  terms_.clear();
  for (auto& [exponents, coefficient] : product) {
    if (coefficient != 0) terms_.emplace(exponents, std::move(coefficient));
  }
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exponents, coefficient] : terms_) {
    coefficient *= scalar;
  }
  return *this;
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  IntegerPolynomial negated = *this;
  for (auto& [exponents, coefficient] : negated.terms_) {
    coefficient = -coefficient;
  }
  return negated;
}

Rational IntegerPolynomial::evaluate(
    const std::map<std::string, BigInt>& point) const {
  Rational total = 0;
  for (const auto& [exponents, coefficient] : terms_) {
    Rational value = coefficient;
    for (const auto& [name, exponent] : exponents) {
      const auto it = point.find(name);
      if (it == point.end()) throw MissingVariableError(name);
      for (unsigned k = 0; k < exponent; ++k) {
        value *= Rational(it->second);
      }
    }
    total += value;
  }
  return total;
}

PseudoBooleanPolynomial IntegerPolynomial::substitute_binary(
    const std::map<std::string, PseudoBooleanPolynomial>& decoders) const {
  PseudoBooleanPolynomial result;
  for (const auto& [exponents, coefficient] : terms_) {
    PseudoBooleanPolynomial term = PseudoBooleanPolynomial::constant(coefficient);
    for (const auto& [name, exponent] : exponents) {
      const auto it = decoders.find(name);
      if (it == decoders.end()) throw MissingVariableError(name);
      for (unsigned k = 0; k < exponent; ++k) {
        term *= it->second;
      }
    }
    result += term;
  }
  return result;
}

std::string IntegerPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exponents, coefficient] : terms_) {
    const bool negative = coefficient < 0;
    const Rational magnitude = negative ? Rational(-coefficient) : coefficient;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const std::string coef_text = format_coefficient(magnitude, !exponents.empty());
    out << coef_text;
    bool first_factor = coef_text.empty();
    for (const auto& [name, exponent] : exponents) {
      if (!first_factor) out << "*";
      first_factor = false;
      out << name;
      if (exponent > 1) out << "^" << exponent;
    }
  }
  return out.str();
}

}  // namespace quboc
