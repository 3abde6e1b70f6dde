#include "ftatlas/amalgam.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "ftatlas/error.hpp"

namespace ftatlas {

SampledFunction SampledFunction::make(UniformGrid grid, std::vector<std::complex<double>> values) {
  if (!(grid.step > 0.0)) throw Error(ErrorCode::kBadParams, "grid step must be positive");
  if (grid.count == 0) throw Error(ErrorCode::kBadParams, "grid must have at least one sample");
  if (values.size() != grid.count) throw Error(ErrorCode::kBadParams, "sample count differs from the grid");
  return SampledFunction{grid, std::move(values)};
}

SampledFunction SampledFunction::indicator(UniformGrid grid, double a, double b) {
  std::vector<std::complex<double>> v(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    // Compare in cell units so that grid points landing on a or b are exact.
    const double x = grid.at(i);
    v[i] = (x >= a - 1e-9 * grid.step && x < b - 1e-9 * grid.step) ? 1.0 : 0.0;
  }
  return make(grid, std::move(v));
}

SampledFunction absolute(const SampledFunction& f) {
  SampledFunction out = f;
  for (auto& v : out.values) v = std::abs(v);
  return out;
}

SampledFunction local_max(const SampledFunction& f, double radius) {
  if (radius < 0.0) throw Error(ErrorCode::kBadParams, "window radius must be nonnegative");
  const auto k = static_cast<std::size_t>(std::floor(radius / f.grid.step + 1e-9));
  const std::size_t n = f.values.size();
  std::vector<double> mag(n);
  for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(f.values[i]);
  SampledFunction out{f.grid, std::vector<std::complex<double>>(n)};
  // Monotone deque over the window [i - k, i + k].
  std::deque<std::size_t> window;
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hi = std::min(n - 1, i + k);
    for (; next <= hi; ++next) {
      while (!window.empty() && mag[window.back()] <= mag[next]) window.pop_back();
      window.push_back(next);
    }
    while (window.front() + k < i) window.pop_front();
    out.values[i] = mag[window.front()];
  }
  return out;
}

double lp_norm(const SampledFunction& f, double p) {
  if (std::isinf(p) && p > 0) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  if (p != 1.0 && p != 2.0) throw Error(ErrorCode::kBadParams, "p must be 1, 2 or infinity");
  double sum = 0.0;
  for (const auto& v : f.values) sum += p == 1.0 ? std::abs(v) : std::norm(v);
  sum *= f.grid.step;
  return p == 1.0 ? sum : std::sqrt(sum);
}

double amalgam_norm(const SampledFunction& f, double radius, double p) { return lp_norm(local_max(f, radius), p); }

SampledFunction grid_convolve(const SampledFunction& f, const SampledFunction& g) {
  const double h = f.grid.step;
  if (std::abs(g.grid.step - h) > 1e-12 * h) throw Error(ErrorCode::kBadParams, "convolution needs a shared step");
  const std::size_t nf = f.values.size(), ng = g.values.size();
  SampledFunction out{{f.grid.origin + g.grid.origin, h, nf + ng - 1}, std::vector<std::complex<double>>(nf + ng - 1)};
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < ng; ++j) out.values[i + j] += f.values[i] * g.values[j] * h;
  return out;
}

EstimateDemo estimate_violation_demo(const std::vector<double>& widths, std::optional<double> step) {
  EstimateDemo demo;
  for (double w : widths) {
    if (!(w > 0.0)) throw Error(ErrorCode::kWidthUnresolvable, "width must be positive");
    const double h = step.value_or(w / 100.0);
    if (!(h > 0.0) || h > w / 100.0 * (1.0 + 1e-12))
      throw Error(ErrorCode::kWidthUnresolvable,
                  "step " + std::to_string(h) + " does not resolve width " + std::to_string(w) + " (need h <= w/100)");
    // The support [0, w) sits inside one width of zero padding on each side.
    const auto cells = static_cast<std::size_t>(std::llround(w / h));
    const UniformGrid grid{-static_cast<double>(cells) * h, h, 3 * cells};
    const SampledFunction f = SampledFunction::indicator(grid, 0.0, w);
    EstimateRow row;
    row.width = w;
    row.step = h;
    row.l2 = lp_norm(f, 2.0);
    row.l1 = lp_norm(f, 1.0);
    row.ratio = row.l2 / row.l1;
    row.expected = 1.0 / std::sqrt(w);
    row.relative_error = std::abs(row.ratio - row.expected) / row.expected;
    demo.rows.push_back(row);
  }
  std::vector<const EstimateRow*> sorted;
  for (const auto& r : demo.rows) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const EstimateRow* a, const EstimateRow* b) { return a->width > b->width; });
  demo.increasing_as_width_shrinks = true;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!(sorted[i]->ratio > sorted[i - 1]->ratio)) demo.increasing_as_width_shrinks = false;
  return demo;
}

}  // namespace ftatlas
