#pragma once

// Local maximum function and Wiener amalgam norms for samples on a uniform
// grid of the real line.

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace ftatlas {

struct UniformGrid {
  double origin = 0.0;
  double step = 1.0;
  std::size_t count = 1;
  double at(std::size_t i) const noexcept { return origin + static_cast<double>(i) * step; }
};

struct SampledFunction {
  UniformGrid grid;
  std::vector<std::complex<double>> values;

  /// Throws kBadParams for step <= 0, an empty grid, or a count mismatch.
  static SampledFunction make(UniformGrid grid, std::vector<std::complex<double>> values);
  /// Indicator of [a, b) sampled on the grid.
  static SampledFunction indicator(UniformGrid grid, double a, double b);
};

/// Sliding maximum of |f| over [x - radius, x + radius]; the window covers
/// floor(radius / h) cells on each side.
SampledFunction local_max(const SampledFunction& f, double radius);

/// Riemann norm (sum |f|^p h)^(1/p); p = infinity gives the max.
/// Throws kBadParams unless p is 1, 2 or infinity.
double lp_norm(const SampledFunction& f, double p);
/// ||local_max(f, radius)||_p.
double amalgam_norm(const SampledFunction& f, double radius, double p);

/// (f * g)(x) = sum_i f(x_i) g(x - x_i) h on the sum grid. Throws kBadParams
/// when the steps differ.
SampledFunction grid_convolve(const SampledFunction& f, const SampledFunction& g);
SampledFunction absolute(const SampledFunction& f);

struct EstimateRow {
  double width = 0.0;
  double step = 0.0;
  double l2 = 0.0;
  double l1 = 0.0;
  double ratio = 0.0;
  double expected = 0.0;
  double relative_error = 0.0;
};

struct EstimateDemo {
  std::vector<EstimateRow> rows;
  /// Ratios strictly increase as the width shrinks.
  bool increasing_as_width_shrinks = false;
};

/// ||f||_2 / ||f||_1 for f the indicator of [0, w), sampled with step
/// h = w / 100 unless a step is given. Throws kWidthUnresolvable when w <= 0
/// or the step exceeds w / 100.
EstimateDemo estimate_violation_demo(const std::vector<double>& widths, std::optional<double> step = std::nullopt);

}  // namespace ftatlas
