#include <doctest.h>

#include <cmath>
#include <random>

#include <ftatlas/amalgam.hpp>
#include <ftatlas/error.hpp>

using namespace ftatlas;
using cd = std::complex<double>;

namespace {

SampledFunction random_function(std::mt19937_64& rng, UniformGrid grid) {
  std::normal_distribution<double> d;
  std::vector<cd> v(grid.count);
  for (auto& x : v) x = {d(rng), d(rng)};
  return SampledFunction::make(grid, std::move(v));
}

}  // namespace

TEST_CASE("sampled functions validate their grid") {
  CHECK_THROWS_AS(SampledFunction::make({0.0, 0.0, 2}, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(SampledFunction::make({0.0, 1.0, 3}, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(SampledFunction::make({0.0, 1.0, 0}, {}), Error);
}

TEST_CASE("local maximum") {
  const auto f = SampledFunction::make({0.0, 1.0, 5}, {cd(0, 1), -3.0, 0.0, 0.0, 2.0});
  const auto m0 = local_max(f, 0.0);
  CHECK(m0.values == std::vector<cd>{1.0, 3.0, 0.0, 0.0, 2.0});
  const auto m1 = local_max(f, 1.0);
  CHECK(m1.values == std::vector<cd>{3.0, 3.0, 3.0, 2.0, 2.0});
  // Radii below one cell do not widen the window.
  CHECK(local_max(f, 0.99).values == m0.values);
  CHECK_THROWS_AS(local_max(f, -1.0), Error);
}

TEST_CASE("norms of an indicator") {
  const UniformGrid grid{-1.0, 0.01, 300};
  const auto f = SampledFunction::indicator(grid, 0.0, 1.0);
  CHECK(lp_norm(f, 1.0) == doctest::Approx(1.0));
  CHECK(lp_norm(f, 2.0) == doctest::Approx(1.0));
  CHECK(lp_norm(f, INFINITY) == 1.0);
  CHECK(amalgam_norm(f, 0.0, 2.0) == doctest::Approx(1.0));
  CHECK(std::abs(amalgam_norm(f, 0.1, 2.0) - std::sqrt(1.2)) <= 2 * grid.step);
  CHECK_THROWS_AS(lp_norm(f, 3.0), Error);

  const auto delta = SampledFunction::indicator(grid, 0.0, 0.01);
  CHECK(lp_norm(delta, 2.0) == doctest::Approx(std::sqrt(grid.step)));
}

TEST_CASE("amalgam norm is monotone in the radius and dominates the plain norm") {
  std::mt19937_64 rng(6);
  const auto f = random_function(rng, {0.0, 0.05, 200});
  double prev = lp_norm(f, 2.0);
  for (double u : {0.0, 0.05, 0.1, 0.3, 1.0, 4.0}) {
    const double a = amalgam_norm(f, u, 2.0);
    CHECK(a >= prev - 1e-12);
    prev = a;
  }
  CHECK(amalgam_norm(f, 100.0, INFINITY) == doctest::Approx(lp_norm(f, INFINITY)));
}

TEST_CASE("discrete convolution") {
  const auto f = SampledFunction::make({0.0, 0.5, 2}, {1.0, 2.0});
  const auto g = SampledFunction::make({1.0, 0.5, 2}, {3.0, 4.0});
  const auto c = grid_convolve(f, g);
  CHECK(c.grid.origin == 1.0);
  CHECK(c.grid.count == 3);
  CHECK(c.values == std::vector<cd>{1.5, 5.0, 4.0});
  CHECK_THROWS_AS(grid_convolve(f, SampledFunction::make({0.0, 0.25, 1}, {1.0})), Error);
}

TEST_CASE("property: convolution bounds") {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 20; ++k) {
    const auto f = random_function(rng, {-1.0, 0.1, 20});
    const auto g = random_function(rng, {0.0, 0.1, 15});
    const auto c = grid_convolve(f, g);
    const auto bound = grid_convolve(absolute(f), absolute(g));
    for (std::size_t i = 0; i < c.values.size(); ++i) CHECK(std::abs(c.values[i]) <= bound.values[i].real() + 1e-12);
    CHECK(lp_norm(c, 2.0) <= lp_norm(f, 1.0) * lp_norm(g, 2.0) + 1e-9);
    CHECK(lp_norm(c, 1.0) <= lp_norm(f, 1.0) * lp_norm(g, 1.0) + 1e-9);
  }
}

TEST_CASE("estimate violation demo") {
  const auto demo = estimate_violation_demo({1.0, 0.1, 0.01, 0.001});
  REQUIRE(demo.rows.size() == 4);
  CHECK(demo.increasing_as_width_shrinks);
  for (const auto& r : demo.rows) {
    CHECK(r.step == doctest::Approx(r.width / 100.0));
    CHECK(r.l1 == doctest::Approx(r.width));
    CHECK(r.ratio == doctest::Approx(1.0 / std::sqrt(r.width)));
    CHECK(r.relative_error <= 1e-9);
  }
  CHECK(estimate_violation_demo({0.5}, 0.001).rows[0].ratio == doctest::Approx(std::sqrt(2.0)));

  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParseError;
  };
  CHECK(code([] { estimate_violation_demo({0.0}); }) == ErrorCode::kWidthUnresolvable);
  CHECK(code([] { estimate_violation_demo({0.1}, 0.01); }) == ErrorCode::kWidthUnresolvable);
}
