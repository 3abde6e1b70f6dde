#pragma once

#include <cstdint>

namespace ftatlas {

/// exp(x1 X1 + x2 X2 + x3 X3) with [X1, X2] = X3.
struct HeisPoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  bool operator==(const HeisPoint&) const = default;
};

HeisPoint heis_multiply(const HeisPoint& p, const HeisPoint& q) noexcept;
HeisPoint heis_inverse(const HeisPoint& p) noexcept;

/// ((x1^2 + x2^2)^2 + x3^4)^(1/4).
double quasi_norm(const HeisPoint& p) noexcept;
/// Left-invariant d(p, q) = |p^-1 q|.
double quasi_distance(const HeisPoint& p, const HeisPoint& q) noexcept;

/// U_N = (N^2, 0, 0).
HeisPoint heis_u(std::int64_t n) noexcept;
/// V_{N,l} = (N^2, l / N^2, l / 2).
HeisPoint heis_v(std::int64_t n, std::int64_t l) noexcept;

}  // namespace ftatlas
