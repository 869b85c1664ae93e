#include "quboc/registry.hpp"

#include "quboc/errors.hpp"

namespace quboc {

void VariableRegistry::reserve(const std::string& name) { taken_.insert(name); }

std::string VariableRegistry::allocate(const std::string& prefix) {
  std::size_t k = counters_.emplace(prefix, 1).first->second;
  std::string name = prefix + std::to_string(k);
  while (taken_.count(name) != 0) {
    ++k;
    name = prefix + std::to_string(k);
  }
  counters_[prefix] = k + 1;
  taken_.insert(name);
  return name;
}

void VariableRegistry::add_binary(const std::string& name) {
  if (index_.count(name) != 0) {
    throw CompileError("binary variable '" + name + "' declared twice");
  }
  taken_.insert(name);
  index_.emplace(name, order_.size());
  order_.push_back(name);
}

void VariableRegistry::declare_bool(const std::string& name) {
  add_binary(name);
  booleans_.push_back(name);
}

bool VariableRegistry::has_binary(const std::string& name) const {
  return index_.count(name) != 0;
}

std::size_t VariableRegistry::index_of(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) {
    throw CompileError("unknown binary variable '" + name + "'");
  }
  return it->second;
}

void VariableRegistry::add_integer_encoding(IntegerEncoding encoding) {
  integers_.push_back(std::move(encoding));
}

void VariableRegistry::add_categorical_encoding(OneHotEncoding encoding) {
  categoricals_.push_back(std::move(encoding));
}

void VariableRegistry::add_permutation_encoding(PermutationEncoding encoding) {
  permutations_.push_back(std::move(encoding));
}

void VariableRegistry::add_slack_encoding(IntegerEncoding encoding) {
  slacks_.push_back(std::move(encoding));
}

void VariableRegistry::mark_auxiliary(const std::string& name) {
  auxiliary_.insert(name);
}

const IntegerEncoding* VariableRegistry::find_integer(
    const std::string& source) const {
  for (const IntegerEncoding& e : integers_) {
    if (e.source == source) return &e;
  }
  return nullptr;
}

const OneHotEncoding* VariableRegistry::find_categorical(
    const std::string& source) const {
  for (const OneHotEncoding& e : categoricals_) {
    if (e.source == source) return &e;
  }
  return nullptr;
}

const PermutationEncoding* VariableRegistry::find_permutation(
    const std::string& source) const {
  for (const PermutationEncoding& e : permutations_) {
    if (e.source == source) return &e;
  }
  return nullptr;
}

DecodedValues VariableRegistry::decode(const Assignment& bits) const {
  DecodedValues values;
  for (const std::string& name : booleans_) {
    const auto it = bits.find(name);
    if (it == bits.end()) throw MissingVariableError(name);
    values.booleans.emplace(name, it->second);
  }
  for (const IntegerEncoding& e : integers_) {
    values.integers.emplace(e.source, decode_integer(e, bits));
  }
  for (const OneHotEncoding& e : categoricals_) {
    std::size_t hits = 0;
    std::size_t level = 0;
    for (std::size_t i = 0; i < e.indicators.size(); ++i) {
      const auto it = bits.find(e.indicators[i]);
      if (it == bits.end()) throw MissingVariableError(e.indicators[i]);
      if (it->second) {
        ++hits;
        level = i;
      }
    }
    if (hits == 1) {
      values.categories.emplace(e.source, e.levels[level]);
    } else {
      values.encoding_valid = false;
    }
  }
  for (const PermutationEncoding& e : permutations_) {
    std::vector<std::size_t> sequence;
    sequence.reserve(e.size);
    bool valid = true;
    for (std::size_t j = 0; j < e.size && valid; ++j) {
      std::size_t hits = 0;
      std::size_t value = 0;
      for (std::size_t k = 0; k < e.size; ++k) {
        const auto it = bits.find(e.vars[j][k]);
        if (it == bits.end()) throw MissingVariableError(e.vars[j][k]);
        if (it->second) {
          ++hits;
          value = k + 1;
        }
      }
      valid = hits == 1;
      if (valid) sequence.push_back(value);
    }
    if (valid) {
      values.permutations.emplace(e.source, std::move(sequence));
    } else {
      values.encoding_valid = false;
    }
  }
  return values;
}

BigInt decode_integer(const IntegerEncoding& encoding, const Assignment& bits) {
  const Rational value = encoding.decode.evaluate(bits);
  return numerator(value);
}

}  // namespace quboc
