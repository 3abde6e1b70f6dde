#include "ftatlas/heisenberg.hpp"

#include <cmath>

namespace ftatlas {

HeisPoint heis_multiply(const HeisPoint& p, const HeisPoint& q) noexcept {
  return {p.x1 + q.x1, p.x2 + q.x2, p.x3 + q.x3 + 0.5 * (p.x1 * q.x2 - p.x2 * q.x1)};
}

HeisPoint heis_inverse(const HeisPoint& p) noexcept { return {-p.x1, -p.x2, -p.x3}; }

double quasi_norm(const HeisPoint& p) noexcept {
  // Scale before raising to the fourth power so large coordinates do not overflow.
  const double h = std::hypot(p.x1, p.x2);
  const double m = std::max(h, std::abs(p.x3));
  if (m == 0.0) return 0.0;
  const double a = h / m, b = p.x3 / m;
  return m * std::sqrt(std::sqrt(a * a * a * a + b * b * b * b));
}

double quasi_distance(const HeisPoint& p, const HeisPoint& q) noexcept {
  return quasi_norm(heis_multiply(heis_inverse(p), q));
}

HeisPoint heis_u(std::int64_t n) noexcept { return {static_cast<double>(n * n), 0.0, 0.0}; }

HeisPoint heis_v(std::int64_t n, std::int64_t l) noexcept {
  const double n2 = static_cast<double>(n * n);
  return {n2, static_cast<double>(l) / n2, static_cast<double>(l) / 2.0};
}

}  // namespace ftatlas
