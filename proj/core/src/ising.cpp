#include "quboc/ising.hpp"

#include <algorithm>
#include <utility>

#include "quboc/errors.hpp"

namespace quboc {
namespace {

std::map<std::string, std::size_t> index_map(
    const std::vector<std::string>& order) {
  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < order.size(); ++j) {
    index.emplace(order[j], j);
  }
  return index;
}

std::size_t index_or_throw(const std::map<std::string, std::size_t>& index,
                           const std::string& name) {
  const auto it = index.find(name);
  if (it == index.end()) {
    throw CompileError("variable '" + name +
                       "' is missing from the model variable order");
  }
  return it->second;
}

void require_symmetric(const std::vector<std::vector<Rational>>& m,
                       const std::string& what) {
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j].size() != m.size()) {
      throw CompileError(what + " matrix is not square");
    }
    for (std::size_t k = j + 1; k < m.size(); ++k) {
      if (m[j][k] != m[k][j]) {
        throw CompileError(what + " matrix is not symmetric at (" +
                           std::to_string(j + 1) + ", " +
                           std::to_string(k + 1) + ")");
      }
    }
  }
}

}  // namespace

Rational QuboModel::value_at_bits(std::uint64_t bits) const {
  Rational total = constant;
  for (std::size_t j = 0; j < size(); ++j) {
    if (((bits >> j) & 1) == 0) continue;
    total += Q[j][j];
    for (std::size_t k = j + 1; k < size(); ++k) {
      if ((bits >> k) & 1) total += Q[j][k] + Q[k][j];
    }
  }
  return total;
}

Rational IsingModel::value_at_spins(const std::vector<int>& spins) const {
  Rational total = offset;
  for (std::size_t j = 0; j < size(); ++j) {
    total += h[j] * spins[j];
    for (std::size_t k = 0; k < size(); ++k) {
      if (j != k) total += J[j][k] * spins[j] * spins[k];
    }
  }
  return total;
}

Rational IsingModel::value_at_bits(std::uint64_t bits) const {
  std::vector<int> spins(size());
  for (std::size_t j = 0; j < size(); ++j) {
    spins[j] = ((bits >> j) & 1) ? -1 : 1;
  }
  return value_at_spins(spins);
}

std::vector<std::vector<Rational>> IsingModel::coupling_with_folded_offset()
    const {
  std::vector<std::vector<Rational>> folded = J;
  if (!folded.empty()) folded[0][0] = offset;
  return folded;
}

IsingPolynomial::IsingPolynomial(std::vector<std::string> variables,
                                 TermMap terms)
    : variables_(std::move(variables)) {
  for (auto& [key, coefficient] : terms) {
    if (coefficient == 0) continue;
    Key sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!sorted.empty() && sorted.back() >= variables_.size()) {
      throw CompileError("spin term references qubit " +
                         std::to_string(sorted.back()) + " but only " +
                         std::to_string(variables_.size()) +
                         " variables are declared");
    }
    terms_[sorted] += coefficient;
    if (terms_[sorted] == 0) terms_.erase(sorted);
  }
}

Rational IsingPolynomial::constant() const {
  const auto it = terms_.find(Key{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t IsingPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [key, coefficient] : terms_) {
    d = std::max(d, key.size());
  }
  return d;
}

Rational IsingPolynomial::evaluate_spins(const std::vector<int>& spins) const {
  Rational total = 0;
  for (const auto& [key, coefficient] : terms_) {
    int sign = 1;
    for (const std::size_t j : key) {
      sign *= spins[j];
    }
    total += coefficient * sign;
  }
  return total;
}

Rational IsingPolynomial::value_at_bits(std::uint64_t bits) const {
  Rational total = 0;
  for (const auto& [key, coefficient] : terms_) {
    int sign = 1;
    for (const std::size_t j : key) {
      if ((bits >> j) & 1) sign = -sign;
    }
    total += coefficient * sign;
  }
  return total;
}

QuboModel qubo_from_polynomial(const PseudoBooleanPolynomial& f,
                               const std::vector<std::string>& order) {
  if (f.degree() > 2) {
    throw CompileError("polynomial has degree " + std::to_string(f.degree()) +
                       "; quadratize before building a QUBO model");
  }
  const auto index = index_map(order);
  QuboModel model;
  model.variables = order;
  model.Q.assign(order.size(), std::vector<Rational>(order.size(), 0));
  for (const auto& [key, coefficient] : f.terms()) {
    if (key.empty()) {
      model.constant = coefficient;
    } else if (key.size() == 1) {
      const std::size_t j = index_or_throw(index, key[0]);
      model.Q[j][j] = coefficient;
    } else {
      const std::size_t j = index_or_throw(index, key[0]);
      const std::size_t k = index_or_throw(index, key[1]);
      const Rational half = coefficient / 2;
      model.Q[j][k] = half;
      model.Q[k][j] = half;
    }
  }
  return model;
}

QuboModel qubo_from_polynomial(const PseudoBooleanPolynomial& f) {
  const auto vars = f.variables();
  return qubo_from_polynomial(f,
                              std::vector<std::string>(vars.begin(), vars.end()));
}

IsingModel qubo_to_ising(const QuboModel& qubo) {
  require_symmetric(qubo.Q, "QUBO");
  const std::size_t n = qubo.size();
  IsingModel model;
  model.variables = qubo.variables;
  model.J.assign(n, std::vector<Rational>(n, 0));
  model.h.assign(n, 0);
  model.offset = qubo.constant;
  for (std::size_t j = 0; j < n; ++j) {
    Rational row_sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      row_sum += qubo.Q[j][k];
      if (j != k) model.J[j][k] = qubo.Q[j][k] / 4;
      model.offset += qubo.Q[j][k] / 4;
    }
    model.offset += qubo.Q[j][j] / 4;
    model.h[j] = -row_sum / 2;
  }
  return model;
}

QuboModel ising_to_qubo(const IsingModel& ising) {
  require_symmetric(ising.J, "coupling");
  const std::size_t n = ising.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (ising.J[j][j] != 0) {
      throw CompileError("coupling matrix has nonzero diagonal at " +
                         std::to_string(j + 1));
    }
  }
  QuboModel model;
  model.variables = ising.variables;
  model.Q.assign(n, std::vector<Rational>(n, 0));
  model.constant = ising.offset;
  for (std::size_t j = 0; j < n; ++j) {
    Rational row_sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      row_sum += ising.J[j][k];
      if (j != k) {
        model.Q[j][k] = ising.J[j][k] * 4;
        model.constant += ising.J[j][k];
      }
    }
    model.Q[j][j] = row_sum * -4 - ising.h[j] * 2;
    model.constant += ising.h[j];
  }
  return model;
}

IsingPolynomial ising_polynomial_from_pb(
    const PseudoBooleanPolynomial& f, const std::vector<std::string>& order) {
  const auto index = index_map(order);
  IsingPolynomial::TermMap terms;
  for (const auto& [key, coefficient] : f.terms()) {
    std::vector<std::size_t> qubits;
    qubits.reserve(key.size());
    for (const std::string& name : key) {
      qubits.push_back(index_or_throw(index, name));
    }
    std::sort(qubits.begin(), qubits.end());

    // prod (1 - s_j) / 2 expands over subsets with alternating sign.
    Rational scale = coefficient;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      scale /= 2;
    }
    const std::size_t subsets = std::size_t{1} << qubits.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      IsingPolynomial::Key subset;
      bool negative = false;
      for (std::size_t i = 0; i < qubits.size(); ++i) {
        if ((mask >> i) & 1) {
          subset.push_back(qubits[i]);
          negative = !negative;
        }
      }
      terms[subset] += negative ? Rational(-scale) : scale;
    }
  }
  return IsingPolynomial(order, std::move(terms));
}

IsingPolynomial ising_polynomial_from_pb(const PseudoBooleanPolynomial& f) {
  const auto vars = f.variables();
  return ising_polynomial_from_pb(
      f, std::vector<std::string>(vars.begin(), vars.end()));
}

PseudoBooleanPolynomial polynomial_from_qubo(const QuboModel& qubo) {
  PseudoBooleanPolynomial::TermMap terms;
  terms[{}] = qubo.constant;
  for (std::size_t j = 0; j < qubo.size(); ++j) {
    terms[{qubo.variables[j]}] += qubo.Q[j][j];
    for (std::size_t k = j + 1; k < qubo.size(); ++k) {
      PseudoBooleanPolynomial::TermKey key = {qubo.variables[j],
                                              qubo.variables[k]};
      std::sort(key.begin(), key.end());
      terms[key] += qubo.Q[j][k] + qubo.Q[k][j];
    }
  }
  return PseudoBooleanPolynomial::from_terms(terms);
}

PseudoBooleanPolynomial binary_polynomial_from_ising(const IsingModel& ising) {
  PseudoBooleanPolynomial result = PseudoBooleanPolynomial::constant(
      ising.offset);
  std::vector<PseudoBooleanPolynomial> spin;
  spin.reserve(ising.size());
  for (std::size_t j = 0; j < ising.size(); ++j) {
    spin.push_back(PseudoBooleanPolynomial::constant(1) -
                   PseudoBooleanPolynomial::variable(ising.variables[j]) *
                       Rational(2));
  }
  for (std::size_t j = 0; j < ising.size(); ++j) {
    result += spin[j] * ising.h[j];
    for (std::size_t k = j + 1; k < ising.size(); ++k) {
      result += spin[j] * spin[k] * (ising.J[j][k] + ising.J[k][j]);
    }
  }
  return result;
}

}  // namespace quboc
