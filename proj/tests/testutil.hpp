#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quboc/polynomial.hpp"

namespace testutil {

using quboc::Assignment;
using quboc::PseudoBooleanPolynomial;
using quboc::Rational;

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline std::vector<std::string> var_names(std::size_t n,
                                          const std::string& prefix = "x") {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back(prefix + std::to_string(i));
  }
  return names;
}

/// All 2^n assignments over the given variables, in binary counting order
/// (names[0] is the least significant bit).
inline std::vector<Assignment> enumerate_assignments(
    const std::vector<std::string>& names) {
  std::vector<Assignment> out;
  const std::size_t count = std::size_t{1} << names.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Assignment a;
    for (std::size_t j = 0; j < names.size(); ++j) {
      a[names[j]] = ((mask >> j) & 1) != 0;
    }
    out.push_back(std::move(a));
  }
  return out;
}

/// Random multilinear polynomial: each subset of the variables up to
/// max_degree gets an integer coefficient in [-coef_mag, coef_mag]
/// with probability density (zero coefficients drop out naturally).
inline PseudoBooleanPolynomial random_pb_polynomial(std::mt19937_64& rng,
                                                    const std::vector<std::string>& names,
                                                    std::size_t max_degree,
                                                    int coef_mag) {
  std::uniform_int_distribution<int> coef(-coef_mag, coef_mag);
  PseudoBooleanPolynomial::TermMap terms;
  const std::size_t count = std::size_t{1} << names.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::string> key;
    for (std::size_t j = 0; j < names.size(); ++j) {
      if ((mask >> j) & 1) key.push_back(names[j]);
    }
    if (key.size() > max_degree) continue;
    const int c = coef(rng);
    if (c != 0) terms[key] = c;
  }
  return PseudoBooleanPolynomial::from_terms(terms);
}

struct BruteResult {
  Rational minimum;
  std::vector<Assignment> minimizers;
};

/// Exhaustive minimum over all assignments of the polynomial's variables.
inline BruteResult brute_min(const PseudoBooleanPolynomial& poly) {
  const auto vars = poly.variables();
  const std::vector<std::string> names(vars.begin(), vars.end());
  BruteResult result;
  bool first = true;
  for (const Assignment& a : enumerate_assignments(names)) {
    const Rational value = poly.evaluate(a);
    if (first || value < result.minimum) {
      result.minimum = value;
      result.minimizers.clear();
      result.minimizers.push_back(a);
      first = false;
    } else if (value == result.minimum) {
      result.minimizers.push_back(a);
    }
  }
  return result;
}

/// Restricts an assignment to the given variables.
inline Assignment project(const Assignment& a,
                          const std::vector<std::string>& names) {
  Assignment out;
  for (const std::string& name : names) {
    out[name] = a.at(name);
  }
  return out;
}

/// Bitmask form of an integer-coefficient polynomial for fast exhaustive
/// evaluation: term i contributes coef[i] when all bits of mask[i] are set in
/// the assignment mask. Variable `order[j]` is bit j.
struct FastPoly {
  std::vector<std::string> order;
  std::vector<std::uint64_t> masks;
  std::vector<long long> coefs;

  long long eval(std::uint64_t assignment) const {
    long long total = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if ((assignment & masks[i]) == masks[i]) total += coefs[i];
    }
    return total;
  }
};

/// Requires integer coefficients; `order` must cover every variable of the
/// polynomial and has at most 64 entries.
inline FastPoly fast_poly(const PseudoBooleanPolynomial& poly,
                          std::vector<std::string> order) {
  FastPoly fast;
  fast.order = std::move(order);
  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < fast.order.size(); ++j) {
    index[fast.order[j]] = j;
  }
  for (const auto& [key, coefficient] : poly.terms()) {
    std::uint64_t mask = 0;
    for (const std::string& name : key) {
      mask |= std::uint64_t{1} << index.at(name);
    }
    fast.masks.push_back(mask);
    fast.coefs.push_back(numerator(coefficient).convert_to<long long>());
  }
  return fast;
}

struct FastBruteResult {
  long long minimum = 0;
  std::vector<std::uint64_t> minimizers;
};

/// Exhaustive minimum over all 2^|order| masks.
inline FastBruteResult fast_brute_min(const FastPoly& poly) {
  FastBruteResult result;
  const std::uint64_t count = std::uint64_t{1} << poly.order.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const long long value = poly.eval(mask);
    if (mask == 0 || value < result.minimum) {
      result.minimum = value;
      result.minimizers.assign(1, mask);
    } else if (value == result.minimum) {
      result.minimizers.push_back(mask);
    }
  }
  return result;
}

/// Argmin assignments of an integer-coefficient polynomial projected onto
/// `names` (as bitmasks over `names`); extra variables of the polynomial are
/// enumerated after the named ones.
inline std::set<std::uint64_t> argmin_masks(const PseudoBooleanPolynomial& poly,
                                            const std::vector<std::string>& names) {
  std::vector<std::string> order = names;
  const std::set<std::string> named(names.begin(), names.end());
  for (const std::string& extra : poly.variables()) {
    if (named.count(extra) == 0) order.push_back(extra);
  }
  const auto brute = fast_brute_min(fast_poly(poly, order));
  const std::uint64_t keep =
      names.empty() ? 0 : ((std::uint64_t{1} << names.size()) - 1);
  std::set<std::uint64_t> projected;
  for (const std::uint64_t mask : brute.minimizers) {
    projected.insert(mask & keep);
  }
  return projected;
}

}  // namespace testutil
