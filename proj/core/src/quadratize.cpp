#include "quboc/quadratize.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "quboc/errors.hpp"
#include "quboc/penalty.hpp"

namespace quboc {
namespace {

using VarPair = std::pair<std::string, std::string>;

struct PairStats {
  std::size_t high_count = 0;
  Rational mass = 0;
};

/// Pair occurring in the most degree>=3 terms; ties broken by the largest
/// total |coefficient| over all terms containing the pair, then by
/// lexicographic order.
VarPair select_pair(const PseudoBooleanPolynomial& f) {
  std::map<VarPair, PairStats> stats;
  for (const auto& [key, coefficient] : f.terms()) {
    if (key.size() < 3) continue;
    for (std::size_t i = 0; i < key.size(); ++i) {
      for (std::size_t j = i + 1; j < key.size(); ++j) {
        stats[{key[i], key[j]}].high_count += 1;
      }
    }
  }
  for (const auto& [key, coefficient] : f.terms()) {
    if (key.size() < 2) continue;
    const Rational magnitude =
        coefficient < 0 ? Rational(-coefficient) : coefficient;
    for (std::size_t i = 0; i < key.size(); ++i) {
      for (std::size_t j = i + 1; j < key.size(); ++j) {
        const auto it = stats.find({key[i], key[j]});
        if (it != stats.end()) it->second.mass += magnitude;
      }
    }
  }

  const VarPair* best = nullptr;
  const PairStats* best_stats = nullptr;
  for (const auto& [pair, pair_stats] : stats) {
    if (best == nullptr ||
        pair_stats.high_count > best_stats->high_count ||
        (pair_stats.high_count == best_stats->high_count &&
         pair_stats.mass > best_stats->mass)) {
      best = &pair;
      best_stats = &pair_stats;
    }
  }
  return *best;
}

PseudoBooleanPolynomial replace_pair(const PseudoBooleanPolynomial& f,
                                     const std::string& x,
                                     const std::string& y,
                                     const std::string& aux) {
  PseudoBooleanPolynomial::TermMap replaced;
  for (const auto& [key, coefficient] : f.terms()) {
    const bool has_x = std::binary_search(key.begin(), key.end(), x);
    const bool has_y = std::binary_search(key.begin(), key.end(), y);
    PseudoBooleanPolynomial::TermKey out;
    if (has_x && has_y) {
      out.reserve(key.size() - 1);
      for (const std::string& name : key) {
        if (name != x && name != y) out.push_back(name);
      }
      out.push_back(aux);
    } else {
      out = key;
    }
    replaced[out] += coefficient;
  }
  return PseudoBooleanPolynomial::from_terms(replaced);
}

PseudoBooleanPolynomial pair_gadget(const std::string& x, const std::string& y,
                                    const std::string& aux) {
  return PseudoBooleanPolynomial::monomial({x, y}, 1) -
         PseudoBooleanPolynomial::monomial({x, aux}, 2) -
         PseudoBooleanPolynomial::monomial({y, aux}, 2) +
         PseudoBooleanPolynomial::monomial({aux}, 3);
}

}  // namespace

QuadratizationReport rosenberg_quadratize(const PseudoBooleanPolynomial& f,
                                          VariableRegistry& registry,
                                          const std::optional<Rational>& P) {
  const Rational constant = P.value_or(penalty_constant(f));
  QuadratizationReport report;
  report.output = f;
  while (report.output.degree() > 2) {
    const VarPair pair = select_pair(report.output);
    const std::string aux = registry.allocate("z");
    registry.add_binary(aux);
    registry.mark_auxiliary(aux);

    report.output = replace_pair(report.output, pair.first, pair.second, aux);

    PairSubstitution substitution;
    substitution.x = pair.first;
    substitution.y = pair.second;
    substitution.aux = aux;
    substitution.constant = constant;
    substitution.penalty =
        pair_gadget(pair.first, pair.second, aux) * constant;
    report.output += substitution.penalty;
    report.substitutions.push_back(std::move(substitution));
  }
  return report;
}

QuadratizationReport negative_monomial_quadratize(
    const PseudoBooleanPolynomial& f, VariableRegistry& registry) {
  for (const auto& [key, coefficient] : f.terms()) {
    if (key.size() >= 3 && coefficient > 0) {
      throw CompileError(
          "monomial with positive coefficient " + to_string(coefficient) +
          " has degree " + std::to_string(key.size()) +
          "; the negative-monomial transform does not apply, use the "
          "rosenberg or hybrid strategy");
    }
  }

  QuadratizationReport report;
  for (const auto& [key, coefficient] : f.terms()) {
    if (key.size() < 3) {
      report.output += PseudoBooleanPolynomial::from_terms({{key, coefficient}});
      continue;
    }
    const std::string aux = registry.allocate("aux");
    registry.add_binary(aux);
    registry.mark_auxiliary(aux);

    PseudoBooleanPolynomial bracket =
        PseudoBooleanPolynomial::constant(1 - static_cast<int>(key.size()));
    for (const std::string& name : key) {
      bracket += PseudoBooleanPolynomial::variable(name);
    }
    report.output +=
        bracket * PseudoBooleanPolynomial::variable(aux) * coefficient;

    LocalSubstitution substitution;
    substitution.monomial = key;
    substitution.coefficient = coefficient;
    substitution.aux = aux;
    report.locals.push_back(std::move(substitution));
  }
  return report;
}

QuadratizationReport quadratize(const PseudoBooleanPolynomial& f,
                                QuadratizationStrategy strategy,
                                VariableRegistry& registry,
                                const std::optional<Rational>& P) {
  switch (strategy) {
    case QuadratizationStrategy::Rosenberg:
      return rosenberg_quadratize(f, registry, P);
    case QuadratizationStrategy::Local:
      return negative_monomial_quadratize(f, registry);
    case QuadratizationStrategy::Hybrid: {
      PseudoBooleanPolynomial negative_high;
      PseudoBooleanPolynomial rest;
      for (const auto& [key, coefficient] : f.terms()) {
        auto term = PseudoBooleanPolynomial::from_terms({{key, coefficient}});
        if (key.size() >= 3 && coefficient < 0) {
          negative_high += term;
        } else {
          rest += term;
        }
      }
      QuadratizationReport local_part =
          negative_monomial_quadratize(negative_high, registry);
      const Rational constant = P.value_or(penalty_constant(f));
      QuadratizationReport report = rosenberg_quadratize(
          rest + local_part.output, registry, constant);
      report.locals = std::move(local_part.locals);
      return report;
    }
  }
  throw CompileError("unknown quadratization strategy");
}

}  // namespace quboc
