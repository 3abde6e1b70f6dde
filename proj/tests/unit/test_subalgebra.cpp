#include <doctest.h>

#include <random>

#include <ftatlas/error.hpp>
#include <ftatlas/matrix_groups.hpp>
#include <ftatlas/subalgebra.hpp>

using namespace ftatlas;

namespace {

LieAlgebra named(const std::string& name, Rational beta = 1) {
  BuiltinParams p;
  p.beta = beta;
  return builtin_algebra(name, p).algebra;
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

}  // namespace

TEST_CASE("ax+b is its own witness") {
  const auto g = named("ax_b");
  const auto w = find_ax_b_or_grelaud(g);
  CHECK(w.kind == WitnessKind::kAxB);
  CHECK(w.generators[0].coords.isApprox(LieVector::basis(2, 0).coords));
  CHECK(w.generators[1].coords.isApprox(LieVector::basis(2, 1).coords));
  CHECK(w.residual <= 1e-9);
  CHECK(w.trial_index == 0);
}

TEST_CASE("Grelaud(2) gives a Grelaud witness with beta 2") {
  const auto g = named("grelaud", 2);
  const auto w = find_ax_b_or_grelaud(g);
  CHECK(w.kind == WitnessKind::kGrelaud);
  CHECK(w.beta == doctest::Approx(2.0));
  CHECK(w.residual <= 1e-9);
  CHECK(verify_subalgebra_template(g, w.generators, w.kind, w.beta).residual <= 1e-9);
}

TEST_CASE("nilpotent and type R algebras have no witness") {
  CHECK(code_of([] { find_ax_b_or_grelaud(named("heisenberg")); }) == ErrorCode::kNoWitnessFound);
  CHECK(code_of([] { find_ax_b_or_grelaud(named("rotation")); }) == ErrorCode::kNoWitnessFound);
}

TEST_CASE("a real eigenvalue wins over a complex pair") {
  // ad(A) has eigenvalues 1 +- i on span{Y1, Y2}, whose parts do not
  // commute, and 2 on Z.
  const auto g = LieAlgebra::from_brackets(
      {"A", "Y1", "Y2", "Z"}, {{0, 1, {{1, 1}, {2, 1}}}, {0, 2, {{1, -1}, {2, 1}}}, {0, 3, {{3, 2}}}, {1, 2, {{3, 1}}}});
  CHECK(find_ax_b_or_grelaud(g).kind == WitnessKind::kAxB);
}

TEST_CASE("template verification") {
  const auto t3 = named("T_n");
  auto idx = [&](const std::string& s) { return *t3.index_of(s); };
  const auto rep = verify_subalgebra_template(
      t3, {LieVector::basis(3, idx("E1_2")), LieVector::basis(3, idx("E2_3")), LieVector::basis(3, idx("E1_3"))},
      WitnessKind::kHeisenberg, 0.0);
  CHECK(rep.residual == 0.0);

  const auto sl2 = named("sl2");
  CHECK(verify_subalgebra_template(sl2, {0.5 * LieVector::basis(3, 0), LieVector::basis(3, 1)}, WitnessKind::kAxB, 0.0)
            .residual <= 1e-12);

  const auto h = named("heisenberg");
  CHECK(code_of([&] {
          verify_subalgebra_template(h, {LieVector::basis(3, 0), LieVector::basis(3, 1)}, WitnessKind::kAxB, 0.0);
        }) == ErrorCode::kNotClosed);
  CHECK(code_of([&] {
          verify_subalgebra_template(sl2, {LieVector::basis(3, 1), LieVector::basis(3, 0)}, WitnessKind::kAxB, 0.0);
        }) == ErrorCode::kTemplateMismatch);
  CHECK(code_of([&] {
          verify_subalgebra_template(sl2, {LieVector::basis(3, 1), LieVector::basis(3, 1)}, WitnessKind::kAxB, 0.0);
        }) == ErrorCode::kTemplateMismatch);
}

TEST_CASE("property: witnesses verify and are stable across seeds") {
  for (const auto& name : {"ax_b", "grelaud", "shearlet_H"}) {
    const auto g = named(name, 2);
    const auto first = find_ax_b_or_grelaud(g, {0, 64});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto w = find_ax_b_or_grelaud(g, {seed, 64});
      CHECK(w.kind == first.kind);
      CHECK(verify_subalgebra_template(g, w.generators, w.kind, w.beta).residual <= 1e-9);
    }
  }
}

TEST_CASE("property: witness kind survives a change of basis") {
  std::mt19937_64 rng(9);
  for (const auto& name : {"ax_b", "grelaud", "shearlet_H"}) {
    const auto g = named(name, 2);
    const auto kind = find_ax_b_or_grelaud(g).kind;
    for (int k = 0; k < 5; ++k) {
      RationalMatrix p(g.dim(), g.dim());
      do {
        for (std::size_t i = 0; i < g.dim(); ++i)
          for (std::size_t j = 0; j < g.dim(); ++j) p(i, j) = random_rational(rng, 5);
      } while (p.rank() < g.dim());
      const auto h = g.change_basis(p);
      const auto w = find_ax_b_or_grelaud(h, {static_cast<std::uint64_t>(k), 64});
      CHECK(w.kind == kind);
      CHECK(verify_subalgebra_template(h, w.generators, w.kind, w.beta).residual <= 1e-9);
    }
  }
}
