#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace quboc {

struct NelderMeadResult {
  std::vector<double> point;
  double value = 0.0;
  /// Every objective evaluation in order, as (point, value).
  std::vector<std::pair<std::vector<double>, double>> trace;
};

/// Derivative-free simplex minimization with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). The initial
/// simplex is the start point plus one vertex per dimension offset by
/// `step`. Fully deterministic; the evaluation budget is the only stopping
/// rule, and the best point ever evaluated is returned even when the budget
/// runs out mid-iteration.
NelderMeadResult nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& start, double step, std::uint64_t budget);

}  // namespace quboc
