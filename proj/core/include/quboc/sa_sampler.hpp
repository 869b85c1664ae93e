#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quboc/ising.hpp"
#include "quboc/polynomial.hpp"
#include "quboc/rational.hpp"
#include "quboc/registry.hpp"

namespace quboc {

struct SampleRecord {
  Assignment assignment;
  Rational energy;
  std::uint64_t occurrences = 0;

  bool operator==(const SampleRecord& other) const = default;
};

/// Aggregated draws keyed by assignment. Inserting the same assignment again
/// adds occurrences; the stated energy must match the stored one.
class SampleSet {
 public:
  void insert(Assignment assignment, Rational energy,
              std::uint64_t occurrences = 1);

  /// Records sorted by ascending energy, then assignment.
  std::vector<SampleRecord> records() const;
  std::uint64_t total_reads() const { return total_; }
  bool empty() const { return samples_.empty(); }
  Rational min_energy() const;
  /// Sum of occurrences over records at the minimum energy.
  std::uint64_t reads_at_min() const;

  bool operator==(const SampleSet& other) const = default;

 private:
  std::map<Assignment, std::pair<Rational, std::uint64_t>> samples_;
  std::uint64_t total_ = 0;
};

/// Inverse-temperature ramp for one read: beta interpolates geometrically
/// from beta0 to beta1 across the sweeps.
struct AnnealSchedule {
  double beta0 = 0.1;
  double beta1 = 10.0;
  std::uint32_t sweeps = 256;
};

/// Single-spin-flip Metropolis annealing. Each read restarts from a random
/// spin state drawn from its own RNG stream (derived from seed and read
/// index, so the read set is order-independent) and performs
/// schedule.sweeps passes over all spins. Proposal energies use doubles;
/// each read's final energy is re-evaluated exactly before insertion.
SampleSet sample(const IsingModel& model, std::uint64_t num_reads,
                 std::uint64_t seed, const AnnealSchedule& schedule = {});

/// Exhaustive enumeration (guard: at most 24 variables). Returns the full
/// spectrum with one occurrence per assignment, or only the minimum-energy
/// records when minimizers_only is set.
SampleSet brute_force(const PseudoBooleanPolynomial& f,
                      bool minimizers_only = false);
SampleSet brute_force(const IsingModel& model, bool minimizers_only = false);
SampleSet brute_force(const QuboModel& model, bool minimizers_only = false);

/// One sample translated back to problem-level values.
struct DecodedSample {
  DecodedValues values;
  Assignment bits;
  Rational energy;
  std::uint64_t occurrences = 0;
  /// True when every penalty polynomial vanishes at the bits (and the
  /// one-hot encodings decode cleanly).
  bool feasible = true;
};

/// Decodes every record through the registry's encodings. Feasibility is
/// judged by the supplied penalty polynomials (empty list: only the
/// encoding-validity check applies). Slack and auxiliary bits stay out of
/// the decoded values.
std::vector<DecodedSample> decode_samples(
    const SampleSet& set, const VariableRegistry& registry,
    const std::vector<PseudoBooleanPolynomial>& penalties = {});

}  // namespace quboc
