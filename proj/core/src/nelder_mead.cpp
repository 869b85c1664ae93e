#include "quboc/nelder_mead.hpp"

#include <algorithm>
#include <limits>

#include "quboc/errors.hpp"

namespace quboc {
namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Vertex {
  std::vector<double> point;
  double value = 0.0;
};

}  // namespace

NelderMeadResult nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& start, double step, std::uint64_t budget) {
  if (start.empty()) {
    throw BackendError("nelder-mead needs at least one dimension");
  }
  if (budget < 1) {
    throw BackendError("nelder-mead needs a positive evaluation budget");
  }

  NelderMeadResult result;
  result.value = std::numeric_limits<double>::infinity();
  std::uint64_t used = 0;

  const auto evaluate = [&](const std::vector<double>& point) {
    const double value = objective(point);
    ++used;
    result.trace.emplace_back(point, value);
    if (value < result.value) {
      result.value = value;
      result.point = point;
    }
    return value;
  };

  const std::size_t dims = start.size();
  std::vector<Vertex> simplex;
  simplex.push_back({start, evaluate(start)});
  for (std::size_t d = 0; d < dims && used < budget; ++d) {
    std::vector<double> point = start;
    point[d] += step;
    simplex.push_back({point, evaluate(point)});
  }

  const auto by_value = [](const Vertex& a, const Vertex& b) {
    return a.value < b.value;
  };

  while (used < budget && simplex.size() == dims + 1) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    Vertex& worst = simplex.back();
    const double best = simplex.front().value;
    const double second_worst = simplex[dims - 1].value;

    std::vector<double> centroid(dims, 0.0);
    for (std::size_t i = 0; i < dims; ++i) {
      for (std::size_t d = 0; d < dims; ++d) {
        centroid[d] += simplex[i].point[d] / static_cast<double>(dims);
      }
    }

    const auto blend = [&](double coefficient) {
      std::vector<double> point(dims);
      for (std::size_t d = 0; d < dims; ++d) {
        point[d] = centroid[d] + coefficient * (centroid[d] - worst.point[d]);
      }
      return point;
    };

    const std::vector<double> reflected = blend(kReflect);
    const double reflected_value = evaluate(reflected);

    if (reflected_value < best) {
      if (used >= budget) break;
      const std::vector<double> expanded = blend(kExpand);
      const double expanded_value = evaluate(expanded);
      if (expanded_value < reflected_value) {
        worst = {expanded, expanded_value};
      } else {
        worst = {reflected, reflected_value};
      }
      continue;
    }
    if (reflected_value < second_worst) {
      worst = {reflected, reflected_value};
      continue;
    }
    if (used >= budget) break;

    const bool outside = reflected_value < worst.value;
    const std::vector<double> contracted =
        blend(outside ? kContract : -kContract);
    const double contracted_value = evaluate(contracted);
    if (contracted_value < (outside ? reflected_value : worst.value)) {
      worst = {contracted, contracted_value};
      continue;
    }

    for (std::size_t i = 1; i <= dims && used < budget; ++i) {
      for (std::size_t d = 0; d < dims; ++d) {
        simplex[i].point[d] = simplex[0].point[d] +
                              kShrink * (simplex[i].point[d] - simplex[0].point[d]);
      }
      simplex[i].value = evaluate(simplex[i].point);
    }
  }

  return result;
}

}  // namespace quboc
