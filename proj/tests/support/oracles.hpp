#pragma once

// Reference computations used only by tests. Each one is written
// independently of the library code it checks.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <ftatlas/exact.hpp>
#include <ftatlas/lie_algebra.hpp>

namespace oracle {

/// |sum_k phi(k) exp(-2 pi i j k / n)|^2 for every character j of Z/n.
inline std::vector<double> dft_power(const Eigen::VectorXcd& phi) {
  const auto n = phi.size();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (Eigen::Index k = 0; k < n; ++k)
      acc += phi(k) * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n));
    out[static_cast<std::size_t>(j)] = std::norm(acc);
  }
  return out;
}

/// Largest slack a(|u_h|) + a(|g_h - u_h|) - |g3 - (u_h x g_h) / 2| over
/// horizontal splits u_h, found by a compass search from several starts.
/// The directions include g_h and its normal, since the kink of the
/// absolute value runs parallel to g_h. Nonnegative iff g factors as u v with
/// both factors in the closed s-ball of the quasi-norm.
inline double heis_split_slack(double g1, double g2, double g3, double s) {
  auto room = [s](double r2) {
    const double v = s * s * s * s - r2 * r2;
    return v < 0.0 ? -1e300 : std::pow(v, 0.25);
  };
  auto f = [&](double u1, double u2) {
    const double v1 = g1 - u1, v2 = g2 - u2;
    const double a = room(u1 * u1 + u2 * u2), b = room(v1 * v1 + v2 * v2);
    if (a < -1e299 || b < -1e299) return -1e300;
    return a + b - std::abs(g3 - 0.5 * (u1 * g2 - u2 * g1));
  };
  const double base = std::atan2(g2, g1);
  double best = -1e300;
  const std::array<std::array<double, 2>, 5> starts{{{0.5, 0.5}, {0.25, 0.75}, {0.75, 0.25}, {0.5, 0.0}, {0.0, 0.5}}};
  for (const auto& st : starts) {
    // Start on the segment from 0 to g or at a horizontal offset of it.
    double u1 = st[0] * g1 - st[1] * 0.1 * s, u2 = st[0] * g2 + st[1] * 0.1 * s;
    double fu = f(u1, u2);
    for (double step = s; step > 1e-13 * std::max(1.0, s);) {
      bool moved = false;
      for (int k = 0; k < 12; ++k) {
        const double ang = k < 8 ? k * std::numbers::pi / 4.0 : base + (k - 8) * std::numbers::pi / 2.0;
        const double c1 = u1 + step * std::cos(ang), c2 = u2 + step * std::sin(ang);
        const double fc = f(c1, c2);
        if (fc > fu) {
          u1 = c1;
          u2 = c2;
          fu = fc;
          moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
    best = std::max(best, fu);
  }
  return best;
}

/// Random solvable algebra R^k semidirect C^0 V: [a_i, v] = D_i v with
/// D_i polynomials in one random rational matrix, so they commute.
/// Returned in a randomly changed basis.
inline ftatlas::LieAlgebra random_triangularizable(std::mt19937_64& rng, std::size_t k, std::size_t m) {
  using ftatlas::Rational;
  std::uniform_int_distribution<int> small(-3, 3);
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(m));
  for (auto& row : t)
    for (auto& v : row) v = small(rng);
  auto matmul = [&](const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
    std::vector<std::vector<Rational>> c(m, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
  };
  const auto t2 = matmul(t, t);
  const std::size_t n = k + m;
  std::vector<Rational> tensor(n * n * n, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t l) -> Rational& { return tensor[(i * n + j) * n + l]; };
  for (std::size_t a = 0; a < k; ++a) {
    const Rational c0 = small(rng), c1 = small(rng), c2 = Rational(small(rng), 2);
    for (std::size_t col = 0; col < m; ++col)
      for (std::size_t row = 0; row < m; ++row) {
        Rational d = c1 * t[row][col] + c2 * t2[row][col];
        if (row == col) d += c0;
        at(a, k + col, k + row) = d;
        at(k + col, a, k + row) = -d;
      }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  const auto g = ftatlas::LieAlgebra::from_tensor(names, tensor);
  ftatlas::RationalMatrix p(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = small(rng);
  } while (p.rank() < n);
  return g.change_basis(p);
}

}  // namespace oracle
