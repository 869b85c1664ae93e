#include "quboc/sa_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "quboc/errors.hpp"

namespace quboc {
namespace {

constexpr std::size_t kBruteForceGuard = 24;

std::mt19937_64 read_rng(std::uint64_t seed, std::uint64_t read) {
  std::seed_seq sequence{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(read), static_cast<std::uint32_t>(read >> 32)};
  return std::mt19937_64(sequence);
}

void validate_schedule(const AnnealSchedule& schedule) {
  if (!(schedule.beta0 > 0) || !(schedule.beta1 > schedule.beta0)) {
    throw BackendError("anneal schedule needs 0 < beta0 < beta1");
  }
  if (schedule.sweeps < 1) {
    throw BackendError("anneal schedule needs at least one sweep");
  }
}

/// Integer-scaled view of a polynomial for fast enumeration; usable when all
/// scaled coefficients and their absolute sum fit comfortably in 64 bits.
struct ScaledPoly {
  bool usable = false;
  BigInt scale = 1;
  std::vector<std::uint64_t> masks;
  std::vector<long long> coefs;
};

ScaledPoly try_scale(const PseudoBooleanPolynomial& f,
                     const std::vector<std::string>& order) {
  ScaledPoly scaled;
  for (const auto& [key, coefficient] : f.terms()) {
    scaled.scale = boost::multiprecision::lcm(scaled.scale,
                                              denominator(coefficient));
  }
  if (scaled.scale > (BigInt(1) << 32)) return scaled;

  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < order.size(); ++j) {
    index.emplace(order[j], j);
  }
  BigInt magnitude_sum = 0;
  const BigInt limit = BigInt(1) << 62;
  for (const auto& [key, coefficient] : f.terms()) {
    const BigInt value = numerator(coefficient) *
                         (scaled.scale / denominator(coefficient));
    magnitude_sum += abs(value);
    if (magnitude_sum >= limit) return scaled;
    std::uint64_t mask = 0;
    for (const std::string& name : key) {
      mask |= std::uint64_t{1} << index.at(name);
    }
    scaled.masks.push_back(mask);
    scaled.coefs.push_back(value.convert_to<long long>());
  }
  scaled.usable = true;
  return scaled;
}

SampleSet enumerate(const PseudoBooleanPolynomial& f,
                    const std::vector<std::string>& order,
                    bool minimizers_only) {
  if (order.size() > kBruteForceGuard) {
    throw BackendError("brute force limited to " +
                       std::to_string(kBruteForceGuard) + " variables, got " +
                       std::to_string(order.size()));
  }

  const std::uint64_t count = std::uint64_t{1} << order.size();
  const auto assignment_for = [&order](std::uint64_t bits) {
    Assignment assignment;
    for (std::size_t j = 0; j < order.size(); ++j) {
      assignment[order[j]] = (bits >> j) & 1;
    }
    return assignment;
  };

  SampleSet set;
  const ScaledPoly scaled = try_scale(f, order);
  if (scaled.usable) {
    long long best = std::numeric_limits<long long>::max();
    std::vector<std::uint64_t> minimizers;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      long long value = 0;
      for (std::size_t i = 0; i < scaled.masks.size(); ++i) {
        if ((bits & scaled.masks[i]) == scaled.masks[i]) {
          value += scaled.coefs[i];
        }
      }
      if (minimizers_only) {
        if (value < best) {
          best = value;
          minimizers.assign(1, bits);
        } else if (value == best) {
          minimizers.push_back(bits);
        }
      } else {
        set.insert(assignment_for(bits), Rational(value, scaled.scale));
      }
    }
    if (minimizers_only) {
      for (const std::uint64_t bits : minimizers) {
        set.insert(assignment_for(bits), Rational(best, scaled.scale));
      }
    }
    return set;
  }

  Rational best;
  std::vector<std::uint64_t> minimizers;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const Assignment assignment = assignment_for(bits);
    const Rational value = f.evaluate(assignment);
    if (minimizers_only) {
      if (minimizers.empty() || value < best) {
        best = value;
        minimizers.assign(1, bits);
      } else if (value == best) {
        minimizers.push_back(bits);
      }
    } else {
      set.insert(assignment, value);
    }
  }
  if (minimizers_only) {
    for (const std::uint64_t bits : minimizers) {
      set.insert(assignment_for(bits), best);
    }
  }
  return set;
}

}  // namespace

void SampleSet::insert(Assignment assignment, Rational energy,
                       std::uint64_t occurrences) {
  auto [it, inserted] =
      samples_.emplace(std::move(assignment), std::make_pair(energy, occurrences));
  if (!inserted) {
    if (it->second.first != energy) {
      throw BackendError("conflicting energies recorded for one assignment: " +
                         to_string(it->second.first) + " vs " +
                         to_string(energy));
    }
    it->second.second += occurrences;
  }
  total_ += occurrences;
}

std::vector<SampleRecord> SampleSet::records() const {
  std::vector<SampleRecord> out;
  out.reserve(samples_.size());
  for (const auto& [assignment, entry] : samples_) {
    out.push_back({assignment, entry.first, entry.second});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SampleRecord& a, const SampleRecord& b) {
                     if (a.energy != b.energy) return a.energy < b.energy;
                     return a.assignment < b.assignment;
                   });
  return out;
}

Rational SampleSet::min_energy() const {
  if (samples_.empty()) {
    throw BackendError("sample set is empty");
  }
  bool first = true;
  Rational best;
  for (const auto& [assignment, entry] : samples_) {
    if (first || entry.first < best) {
      best = entry.first;
      first = false;
    }
  }
  return best;
}

std::uint64_t SampleSet::reads_at_min() const {
  const Rational best = min_energy();
  std::uint64_t count = 0;
  for (const auto& [assignment, entry] : samples_) {
    if (entry.first == best) count += entry.second;
  }
  return count;
}

SampleSet sample(const IsingModel& model, std::uint64_t num_reads,
                 std::uint64_t seed, const AnnealSchedule& schedule) {
  validate_schedule(schedule);
  if (num_reads < 1) {
    throw BackendError("num_reads must be at least 1");
  }

  const std::size_t n = model.size();
  std::vector<double> h(n);
  std::vector<std::vector<double>> coupling(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    h[j] = to_double(model.h[j]);
    for (std::size_t k = 0; k < n; ++k) {
      if (j != k) coupling[j][k] = to_double(model.J[j][k] + model.J[k][j]);
    }
  }

  std::vector<double> betas(schedule.sweeps);
  const double ratio = schedule.beta1 / schedule.beta0;
  for (std::uint32_t t = 0; t < schedule.sweeps; ++t) {
    const double progress =
        schedule.sweeps == 1
            ? 1.0
            : static_cast<double>(t) / (schedule.sweeps - 1);
    betas[t] = schedule.beta0 * std::pow(ratio, progress);
  }

  SampleSet set;
  std::vector<int> spins(n);
  for (std::uint64_t read = 0; read < num_reads; ++read) {
    auto rng = read_rng(seed, read);
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
      spins[j] = coin(rng) ? 1 : -1;
    }

    for (std::uint32_t t = 0; t < schedule.sweeps; ++t) {
      const double beta = betas[t];
      for (std::size_t j = 0; j < n; ++j) {
        double field = h[j];
        for (std::size_t k = 0; k < n; ++k) {
          field += coupling[j][k] * spins[k];
        }
        const double delta = -2.0 * spins[j] * field;
        if (delta <= 0.0 || uniform(rng) < std::exp(-beta * delta)) {
          spins[j] = -spins[j];
        }
      }
    }

    Assignment assignment;
    for (std::size_t j = 0; j < n; ++j) {
      assignment[model.variables[j]] = spins[j] < 0;
    }
    set.insert(std::move(assignment), model.value_at_spins(spins));
  }
  return set;
}

SampleSet brute_force(const PseudoBooleanPolynomial& f, bool minimizers_only) {
  const auto vars = f.variables();
  return enumerate(f, std::vector<std::string>(vars.begin(), vars.end()),
                   minimizers_only);
}

SampleSet brute_force(const IsingModel& model, bool minimizers_only) {
  return enumerate(binary_polynomial_from_ising(model), model.variables,
                   minimizers_only);
}

SampleSet brute_force(const QuboModel& model, bool minimizers_only) {
  return enumerate(polynomial_from_qubo(model), model.variables,
                   minimizers_only);
}

std::vector<DecodedSample> decode_samples(
    const SampleSet& set, const VariableRegistry& registry,
    const std::vector<PseudoBooleanPolynomial>& penalties) {
  std::vector<DecodedSample> out;
  for (const SampleRecord& record : set.records()) {
    DecodedSample decoded;
    decoded.values = registry.decode(record.assignment);
    decoded.bits = record.assignment;
    decoded.energy = record.energy;
    decoded.occurrences = record.occurrences;
    decoded.feasible = decoded.values.encoding_valid;
    for (const PseudoBooleanPolynomial& penalty : penalties) {
      if (penalty.evaluate(record.assignment) != 0) {
        decoded.feasible = false;
        break;
      }
    }
    out.push_back(std::move(decoded));
  }
  return out;
}

}  // namespace quboc
