#include <doctest.h>

#include <random>

#include <ftatlas/error.hpp>
#include <ftatlas/lie_algebra.hpp>
#include <ftatlas/matrix_groups.hpp>

#include "oracles.hpp"

using namespace ftatlas;

namespace {

LieAlgebra heisenberg() { return LieAlgebra::from_brackets({"X1", "X2", "X3"}, {{0, 1, {{2, 1}}}}); }
LieAlgebra ax_b() { return LieAlgebra::from_brackets({"A", "X"}, {{0, 1, {{1, 1}}}}); }
LieAlgebra grelaud(Rational beta) {
  return LieAlgebra::from_brackets({"A", "Y1", "Y2"}, {{0, 1, {{1, 1}, {2, beta}}}, {0, 2, {{1, -beta}, {2, 1}}}});
}
LieAlgebra rotation() { return LieAlgebra::from_brackets({"A", "Y1", "Y2"}, {{0, 1, {{2, 1}}}, {0, 2, {{1, -1}}}}); }
LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  return LieAlgebra::from_brackets(names, {});
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParseError;
}

LieVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = u(rng);
  return LieVector(v);
}

std::vector<LieAlgebra> bundled() {
  std::vector<LieAlgebra> out{heisenberg(), ax_b(), grelaud(2), rotation(), abelian(3)};
  for (const auto& name : {"sl2", "T_n", "shearlet_H", "so_pq"}) out.push_back(builtin_algebra(name).algebra);
  return out;
}

}  // namespace

TEST_CASE("validation accepts consistent data and reports violations") {
  CHECK(abelian(3).is_abelian());
  CHECK_FALSE(heisenberg().is_abelian());

  std::vector<Rational> t(27, Rational(0));
  t[(0 * 3 + 1) * 3 + 2] = 1;
  t[(1 * 3 + 0) * 3 + 2] = 1;
  CHECK(code_of([&] { LieAlgebra::from_tensor({"a", "b", "c"}, t); }) == ErrorCode::kAntisymmetryViolation);

  // [e0,e1] = e1, [e1,e2] = e0 fails Jacobi on (0,1,2).
  CHECK(code_of([] { LieAlgebra::from_brackets({"a", "b", "c"}, {{0, 1, {{1, 1}}}, {1, 2, {{0, 1}}}}); }) ==
        ErrorCode::kJacobiViolation);
  try {
    LieAlgebra::from_brackets({"a", "b", "c"}, {{0, 1, {{1, 1}}}, {1, 2, {{0, 1}}}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(") != std::string::npos);
  }

  std::vector<double> ft(8, 0.0);
  ft[(0 * 2 + 1) * 2 + 1] = 1.0;
  ft[(1 * 2 + 0) * 2 + 1] = -1.0 + 1e-12;
  CHECK_NOTHROW(LieAlgebra::from_tensor({"A", "X"}, ft, 1e-9));
  ft[(1 * 2 + 0) * 2 + 1] = -0.9;
  CHECK(code_of([&] { LieAlgebra::from_tensor({"A", "X"}, ft, 1e-9); }) == ErrorCode::kAntisymmetryViolation);
}

TEST_CASE("bracket and ad on small named algebras") {
  const auto h = heisenberg();
  CHECK(bracket(h, LieVector::basis(3, 0), LieVector::basis(3, 1)).coords.isApprox(LieVector::basis(3, 2).coords));
  CHECK(bracket(h, LieVector::basis(3, 1), LieVector::basis(3, 1)).coords.isZero());
  const auto a = ax_b();
  CHECK(bracket(a, LieVector::basis(2, 0), LieVector::basis(2, 1)).coords.isApprox(LieVector::basis(2, 1).coords));
  CHECK(code_of([&] { bracket(a, LieVector::basis(2, 0), LieVector::basis(3, 1)); }) == ErrorCode::kDimMismatch);
  CHECK(code_of([&] { ad_matrix(a, LieVector::basis(3, 1)); }) == ErrorCode::kDimMismatch);

  const Eigen::MatrixXd ad_a = ad_matrix(a, LieVector::basis(2, 0));
  Eigen::Vector2d ev = ad_a.eigenvalues().real();
  std::sort(ev.data(), ev.data() + 2);
  CHECK(ev[0] == doctest::Approx(0.0));
  CHECK(ev[1] == doctest::Approx(1.0));
  CHECK(ad_matrix(abelian(3), LieVector::basis(3, 2)).isZero());

  const Eigen::MatrixXd g = ad_matrix(grelaud(1), LieVector::basis(3, 0));
  Eigen::Matrix2d expected;
  expected << 1, -1, 1, 1;
  CHECK(g.bottomRightCorner(2, 2).isApprox(expected));
}

TEST_CASE("series dimensions and predicates") {
  CHECK(lower_central_series(heisenberg()).dims == std::vector<std::size_t>{3, 1, 0});
  CHECK(derived_series(ax_b()).dims == std::vector<std::size_t>{2, 1, 0});
  CHECK(lower_central_series(ax_b()).dims == std::vector<std::size_t>{2, 1});
  CHECK(lower_central_series(abelian(4)).dims == std::vector<std::size_t>{4, 0});
  CHECK(derived_series(abelian(4)).dims == std::vector<std::size_t>{4, 0});
  CHECK(is_nilpotent(heisenberg()));
  CHECK(is_solvable(heisenberg()));
  CHECK(is_solvable(ax_b()));
  CHECK_FALSE(is_nilpotent(ax_b()));
  const auto sl2 = builtin_algebra("sl2").algebra;
  CHECK_FALSE(is_solvable(sl2));
  CHECK_FALSE(is_nilpotent(sl2));
  CHECK(derived_series(sl2).dims == std::vector<std::size_t>{3});

  const auto one = abelian(1);
  CHECK(is_nilpotent(one));
  CHECK(is_exponential(one).exponential);
  CHECK(is_type_R(one));

  // Each term lies inside the previous one.
  const auto chain = lower_central_series(builtin_algebra("T_n", {1, 2, 1, 5}).algebra);
  for (std::size_t k = 1; k < chain.subspaces.size(); ++k) {
    const auto& prev = chain.subspaces[k - 1];
    const auto& cur = chain.subspaces[k];
    if (cur.cols() == 0) continue;
    Eigen::MatrixXd both(prev.rows(), prev.cols() + cur.cols());
    both << prev, cur;
    CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(both).rank() == Eigen::FullPivLU<Eigen::MatrixXd>(prev).rank());
  }
}

TEST_CASE("engel spot check agrees with nilpotency") {
  CHECK(engel_spot_check(heisenberg(), 10, 1));
  CHECK_FALSE(engel_spot_check(ax_b(), 10, 1));
  CHECK(engel_spot_check(abelian(3), 10, 1));
  for (const auto& g : bundled()) CHECK(engel_spot_check(g, 8, 3) == is_nilpotent(g));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 15; ++k) {
    const auto g = oracle::random_triangularizable(rng, 1 + k % 2, 2 + k % 3);
    CHECK(engel_spot_check(g, 6, static_cast<std::uint64_t>(k)) == is_nilpotent(g));
    CHECK((!is_nilpotent(g) || is_solvable(g)));
  }
}

TEST_CASE("roots of the bundled solvable algebras") {
  const auto a = LieVector::basis(3, 0);
  const auto h = complexified_roots(heisenberg());
  CHECK(h.roots.size() == 3);
  for (const auto& r : h.roots) {
    CHECK(r.real_part.norm() < 1e-9);
    CHECK(r.imag_part.norm() < 1e-9);
  }
  const auto rs = complexified_roots(grelaud(2));
  std::vector<std::complex<double>> at_a;
  for (const auto& r : rs.roots) at_a.push_back(r.evaluate(a));
  // The eigenvalues of [[1, -2], [2, 1]] are 1 +- 2i.
  auto has = [&](std::complex<double> z) {
    return std::any_of(at_a.begin(), at_a.end(), [&](auto w) { return std::abs(w - z) < 1e-8; });
  };
  CHECK(has({0, 0}));
  CHECK(has({1, 2}));
  CHECK(has({1, -2}));
  for (double r : rs.step_residuals) CHECK(r <= 1e-9);

  CHECK(code_of([] { complexified_roots(builtin_algebra("sl2").algebra); }) == ErrorCode::kNotSolvable);
  CHECK(code_of([] { is_type_R(builtin_algebra("sl2").algebra); }) == ErrorCode::kNotSolvable);
}

TEST_CASE("exponential and type R tests") {
  CHECK(is_exponential(ax_b()).exponential);
  CHECK_FALSE(is_type_R(ax_b()));
  CHECK(is_exponential(grelaud(-2)).exponential);
  CHECK(is_type_R(heisenberg()));
  const auto rot = is_exponential(rotation());
  CHECK_FALSE(rot.exponential);
  REQUIRE(rot.offending_root.has_value());
  CHECK(std::abs(std::abs(rot.offending_root->evaluate(LieVector::basis(3, 0))) - 1.0) < 1e-8);
  CHECK(is_type_R(rotation()));
}

TEST_CASE("property: Jacobi, ad homomorphism and root traces on random algebras") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 20; ++k) {
    const auto g = oracle::random_triangularizable(rng, 1 + k % 2, 2 + k % 3);
    const std::size_t n = g.dim();
    const auto x = random_vector(rng, n), y = random_vector(rng, n), z = random_vector(rng, n);
    const double scale = std::max(1.0, g.max_structure_constant());
    const LieVector jac =
        bracket(g, x, bracket(g, y, z)) + bracket(g, y, bracket(g, z, x)) + bracket(g, z, bracket(g, x, y));
    CHECK(jac.coords.cwiseAbs().maxCoeff() <= 1e-9 * scale * scale * 10);
    const Eigen::MatrixXd lhs = ad_matrix(g, bracket(g, x, y));
    const Eigen::MatrixXd rhs = ad_matrix(g, x) * ad_matrix(g, y) - ad_matrix(g, y) * ad_matrix(g, x);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-9 * scale * scale * 10);
    // Bilinearity.
    const LieVector lin = bracket(g, 2.0 * x + y, z) - (2.0 * bracket(g, x, z) + bracket(g, y, z));
    CHECK(lin.coords.cwiseAbs().maxCoeff() <= 1e-9 * scale * 10);

    const auto rs = complexified_roots(g, {static_cast<std::uint64_t>(k), 32});
    CHECK(rs.roots.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> sum = 0.0;
      for (const auto& r : rs.roots) sum += r.evaluate(LieVector::basis(n, i));
      CHECK(std::abs(sum - g.ad_basis(i).trace()) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("property: exponential verdict survives a change of basis") {
  std::mt19937_64 rng(5);
  for (const auto& g : {ax_b(), grelaud(2), rotation(), heisenberg()}) {
    const bool before = is_exponential(g).exponential;
    for (int k = 0; k < 5; ++k) {
      RationalMatrix p(g.dim(), g.dim());
      do {
        for (std::size_t i = 0; i < g.dim(); ++i)
          for (std::size_t j = 0; j < g.dim(); ++j) p(i, j) = random_rational(rng, 4);
      } while (p.rank() < g.dim());
      CHECK(is_exponential(g.change_basis(p)).exponential == before);
    }
  }
}
