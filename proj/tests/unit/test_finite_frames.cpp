#include <doctest.h>

#include <random>

#include <ftatlas/error.hpp>
#include <ftatlas/finite_frames.hpp>

#include "oracles.hpp"

using namespace ftatlas;
using cd = std::complex<double>;

namespace {

GroupVector vec(std::initializer_list<cd> v) {
  GroupVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto x : v) out(i++) = x;
  return out;
}

GroupVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  GroupVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
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

TEST_CASE("group families and table validation") {
  CHECK(FiniteGroup::symmetric(3).order() == 6);
  CHECK(FiniteGroup::symmetric(5).order() == 120);
  CHECK(FiniteGroup::symmetric(3).identity() == 0);
  CHECK(FiniteGroup::dihedral(4).order() == 8);
  CHECK_FALSE(FiniteGroup::dihedral(4).is_abelian());
  CHECK(FiniteGroup::heisenberg_mod(3).order() == 27);
  CHECK_FALSE(FiniteGroup::heisenberg_mod(2).is_abelian());
  CHECK(FiniteGroup::cyclic(5).is_abelian());
  CHECK(FiniteGroup::symmetric(3).conjugacy_classes().size() == 3);
  CHECK(FiniteGroup::dihedral(4).conjugacy_classes().size() == 5);

  CHECK(code_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }) == ErrorCode::kInvalidGroup);
  // A Latin square without associativity: x*y = x - y mod 3.
  CHECK(code_of([] { FiniteGroup::from_table({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}); }) == ErrorCode::kInvalidGroup);
  CHECK(code_of([] { FiniteGroup::symmetric(6); }) == ErrorCode::kInvalidGroup);
  CHECK(code_of([] { FiniteGroup::heisenberg_mod(5); }) == ErrorCode::kInvalidGroup);
}

TEST_CASE("subgroups") {
  const auto z4 = FiniteGroup::cyclic(4);
  const auto h = make_subgroup(z4, {2, 0});
  CHECK(h.elements == std::vector<Element>{0, 2});
  CHECK(h.group.order() == 2);
  CHECK(code_of([&] { make_subgroup(z4, {0, 1}); }) == ErrorCode::kNotASubgroup);
  CHECK(code_of([&] { make_subgroup(z4, {2}); }) == ErrorCode::kNotASubgroup);
}

TEST_CASE("regular representation") {
  const auto z2 = FiniteGroup::cyclic(2);
  const auto rep = regular_rep(z2);
  CHECK(rep.matrices[0].isIdentity());
  Eigen::Matrix2cd swap;
  swap << 0, 1, 1, 0;
  CHECK(rep.matrices[1].isApprox(swap));
  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(rep_residual(s3, regular_rep(s3)) == 0.0);
  CHECK(regular_rep(s3).matrices[s3.identity()].isIdentity());
}

TEST_CASE("convolution and involution") {
  const auto z2 = FiniteGroup::cyclic(2);
  CHECK(convolve(z2, vec({1, 2}), vec({3, 4})).isApprox(vec({11, 10})));
  std::mt19937_64 rng(1);
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::heisenberg_mod(2), FiniteGroup::dihedral(5)}) {
    const auto f = random_vector(rng, g.order()), phi = random_vector(rng, g.order());
    CHECK(convolve(g, f, delta(g, g.identity())).isApprox(f));
    CHECK(involute(g, involute(g, phi)).isApprox(phi));
    const GroupVector c = convolve(g, f, involute(g, phi));
    for (Element x = 0; x < g.order(); ++x)
      CHECK(std::abs(c(static_cast<Eigen::Index>(x)) - translate(g, x, phi).dot(f)) < 1e-10);
  }
}

TEST_CASE("frame reports on Z/2") {
  const auto z2 = FiniteGroup::cyclic(2);
  const auto full = frame_report(z2, vec({1, 0.5}), all_elements(z2));
  CHECK(full.lower_bound == doctest::Approx(0.25));
  CHECK(full.upper_bound == doctest::Approx(2.25));
  CHECK(full.is_frame);
  CHECK(full.is_riesz);
  CHECK_FALSE(full.is_parseval);
  CHECK(full.convolution_residual <= 1e-12);

  const auto one = frame_report(z2, vec({1, 0.5}), {0});
  CHECK(one.lower_bound == doctest::Approx(0.0));
  CHECK_FALSE(one.is_frame);

  const auto flat = frame_report(z2, vec({1, 1}), all_elements(z2));
  CHECK(flat.lower_bound == doctest::Approx(0.0));
  CHECK(flat.upper_bound == doctest::Approx(4.0));
  CHECK_FALSE(flat.is_frame);

  CHECK(code_of([&] { frame_report(z2, vec({1, 1}), {}); }) == ErrorCode::kEmptyShiftSet);
  CHECK(code_of([&] { frame_report(z2, vec({1, 1, 1}), {0}); }) == ErrorCode::kSizeMismatch);
}

TEST_CASE("delta at the identity gives an orthonormal basis") {
  for (const auto& g : {FiniteGroup::cyclic(7), FiniteGroup::symmetric(4), FiniteGroup::heisenberg_mod(3)}) {
    const auto r = frame_report(g, delta(g, g.identity()), all_elements(g));
    CHECK(r.lower_bound == doctest::Approx(1.0));
    CHECK(r.upper_bound == doctest::Approx(1.0));
    CHECK(r.is_onb);
  }
}

TEST_CASE("canonical tight generator") {
  const auto z2 = FiniteGroup::cyclic(2);
  const auto eta = canonical_tight_generator(z2, vec({1, 0.5}));
  CHECK(eta.norm() == doctest::Approx(1.0));
  CHECK(convolve(z2, involute(z2, eta), eta).isApprox(delta(z2, 0)));
  CHECK(frame_report(z2, eta, all_elements(z2)).is_parseval);

  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(canonical_tight_generator(s3, 3.0 * delta(s3, 0)).isApprox(delta(s3, 0)));
  CHECK(code_of([&] { canonical_tight_generator(z2, vec({1, 1})); }) == ErrorCode::kNotAFrame);
}

TEST_CASE("property: tight generators on random frames of small groups") {
  std::mt19937_64 rng(77);
  const std::vector<FiniteGroup> groups{FiniteGroup::cyclic(5),        FiniteGroup::symmetric(3),
                                        FiniteGroup::dihedral(4),      FiniteGroup::heisenberg_mod(2),
                                        FiniteGroup::symmetric(4),     FiniteGroup::dihedral(6)};
  for (int k = 0; k < 100; ++k) {
    const auto& g = groups[static_cast<std::size_t>(k) % groups.size()];
    const auto phi = random_vector(rng, g.order());
    if (!frame_report(g, phi, all_elements(g)).is_frame) continue;
    const auto eta = canonical_tight_generator(g, phi);
    CHECK(std::abs(eta.norm() - 1.0) <= 1e-9);
    CHECK((convolve(g, involute(g, eta), eta) - delta(g, g.identity())).cwiseAbs().maxCoeff() <= 1e-9);
    const auto r = frame_report(g, eta, all_elements(g));
    CHECK(r.is_parseval);
  }
}

TEST_CASE("property: frame bounds on Z/n match the DFT oracle") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto g = FiniteGroup::cyclic(n);
    for (int k = 0; k < 10; ++k) {
      const auto phi = random_vector(rng, n);
      const auto power = oracle::dft_power(phi);
      const auto r = frame_report(g, phi, all_elements(g));
      CHECK(std::abs(r.lower_bound - *std::min_element(power.begin(), power.end())) <= 1e-8);
      CHECK(std::abs(r.upper_bound - *std::max_element(power.begin(), power.end())) <= 1e-8);
    }
  }
}

TEST_CASE("property: Parseval identity for the frame operator") {
  std::mt19937_64 rng(8);
  const auto g = FiniteGroup::dihedral(3);
  const auto phi = random_vector(rng, g.order());
  const auto f = random_vector(rng, g.order()), h = random_vector(rng, g.order());
  cd lhs = 0.0;
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(6, 6);
  for (Element x = 0; x < g.order(); ++x) {
    const auto t = translate(g, x, phi);
    lhs += t.dot(f) * std::conj(t.dot(h));
    s += t * t.adjoint();
  }
  CHECK(std::abs(lhs - (s * h).dot(f)) <= 1e-10);
}

TEST_CASE("property: frame bounds are unitary invariants of the family") {
  std::mt19937_64 rng(12);
  const auto g = FiniteGroup::symmetric(3);
  const auto phi = random_vector(rng, 6);
  Eigen::MatrixXcd t(6, 6);
  for (Element x = 0; x < 6; ++x) t.col(static_cast<Eigen::Index>(x)) = translate(g, x, phi);
  Eigen::MatrixXcd m(6, 6);
  for (auto& v : m.reshaped()) v = random_vector(rng, 1)(0);
  const Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
  const auto a = family_report(t), b = family_report(u * t);
  CHECK(a.lower_bound == doctest::Approx(b.lower_bound));
  CHECK(a.upper_bound == doctest::Approx(b.upper_bound));
  for (std::size_t k = 0; k < a.gram_spectrum.size(); ++k)
    CHECK(a.gram_spectrum[k] == doctest::Approx(b.gram_spectrum[k]).epsilon(1e-9));
}

TEST_CASE("Riesz dichotomy check") {
  const auto z4 = FiniteGroup::cyclic(4);
  const auto full = riesz_theorem_check(z4, vec({2, 1, 0, 0}), all_elements(z4));
  CHECK(full.is_frame);
  CHECK(full.report.is_riesz);
  CHECK(full.dichotomy_holds);
  const auto part = riesz_theorem_check(z4, vec({2, 1, 0, 0}), {0, 1, 2});
  CHECK_FALSE(part.is_frame);
  CHECK(part.dichotomy_holds);
  const auto z2 = FiniteGroup::cyclic(2);
  const auto flat = riesz_theorem_check(z2, vec({1, 1}), all_elements(z2));
  CHECK_FALSE(flat.is_frame);
  CHECK(flat.report.lower_bound == doctest::Approx(0.0));
}

TEST_CASE("wavelet transform and admissibility") {
  const auto s3 = FiniteGroup::symmetric(3);
  const auto rep = regular_rep(s3);
  std::mt19937_64 rng(4);
  const auto u = random_vector(rng, 6);
  CHECK(wavelet_transform(rep, delta(s3, 0), u).isApprox(u));
  CHECK(is_admissible(rep, delta(s3, 0)));
  CHECK_FALSE(is_admissible(rep, GroupVector::Zero(6)));
  const auto z2 = FiniteGroup::cyclic(2);
  CHECK_FALSE(is_admissible(regular_rep(z2), vec({1, 1}) / std::sqrt(2.0)));
  CHECK(code_of([&] { wavelet_transform(rep, delta(s3, 0), vec({1})); }) == ErrorCode::kSizeMismatch);
}

TEST_CASE("isotypic projections of S3 and Z/3") {
  const auto s3 = FiniteGroup::symmetric(3);
  const auto ps = isotypic_projections(s3);
  REQUIRE(ps.size() == 3);
  std::vector<double> ranks;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(6, 6);
  for (const auto& p : ps) {
    ranks.push_back(p.trace().real());
    sum += p;
  }
  std::sort(ranks.begin(), ranks.end());
  CHECK(ranks[0] == doctest::Approx(1.0));
  CHECK(ranks[1] == doctest::Approx(1.0));
  CHECK(ranks[2] == doctest::Approx(4.0));
  CHECK(sum.isIdentity(1e-10));
  CHECK(isotypic_projections(FiniteGroup::cyclic(3)).size() == 3);
}

TEST_CASE("universal sampling transfer") {
  const auto z3 = FiniteGroup::cyclic(3);
  const Eigen::MatrixXcd constants = Eigen::MatrixXcd::Constant(3, 3, 1.0 / 3.0);
  const auto t = universal_sampling_transfer(z3, delta(z3, 0), all_elements(z3), constants);
  CHECK(t.subspace_dimension == 1);
  CHECK(t.report.lower_bound == doctest::Approx(1.0));
  CHECK(t.report.upper_bound == doctest::Approx(1.0));
  CHECK(t.psi_admissible);

  const auto id = universal_sampling_transfer(z3, vec({1, 0.5, 0}), all_elements(z3), Eigen::MatrixXcd::Identity(3, 3));
  CHECK(id.eta.isApprox(vec({1, 0.5, 0})));
  CHECK(id.report.lower_bound == doctest::Approx(id.original.lower_bound));

  const auto s3 = FiniteGroup::symmetric(3);
  for (const auto& p : isotypic_projections(s3)) {
    if (std::abs(p.trace().real() - 1.0) > 1e-9) continue;
    const auto r = universal_sampling_transfer(s3, delta(s3, 0), all_elements(s3), p);
    CHECK(r.report.lower_bound == doctest::Approx(1.0));
    CHECK(r.report.upper_bound == doctest::Approx(1.0));
  }

  Eigen::MatrixXcd notproj = Eigen::MatrixXcd::Identity(3, 3) * 2.0;
  CHECK(code_of([&] { universal_sampling_transfer(z3, delta(z3, 0), all_elements(z3), notproj); }) ==
        ErrorCode::kNotAProjection);
  Eigen::MatrixXcd e0 = Eigen::MatrixXcd::Zero(3, 3);
  e0(0, 0) = 1.0;
  CHECK(code_of([&] { universal_sampling_transfer(z3, delta(z3, 0), all_elements(z3), e0); }) ==
        ErrorCode::kNotCommuting);
  CHECK(code_of([&] { universal_sampling_transfer(z3, vec({1, 1, 1}), all_elements(z3), constants); }) ==
        ErrorCode::kNotAFrame);
}

TEST_CASE("restriction decomposition") {
  const auto s3 = FiniteGroup::symmetric(3);
  const auto self = restriction_decomposition(s3, all_elements(s3));
  CHECK(self.multiplicity == 1);
  CHECK(self.intertwining_residual == 0.0);

  // A3: identity and the two 3-cycles, lexicographic indices 0, 3, 4.
  const auto a3 = restriction_decomposition(s3, {0, 3, 4});
  CHECK(a3.multiplicity == 2);
  CHECK(a3.intertwining_residual <= 1e-10);
  CHECK(a3.unitarity_residual == 0.0);

  const auto z4 = restriction_decomposition(FiniteGroup::cyclic(4), {0, 2});
  CHECK(z4.multiplicity == 2);
  CHECK(z4.representatives == std::vector<Element>{0, 1});
  CHECK(z4.intertwining_residual <= 1e-10);

  CHECK(code_of([&] { restriction_decomposition(s3, {0, 1, 3}); }) == ErrorCode::kNotASubgroup);
}

TEST_CASE("transport frame") {
  const auto s3 = FiniteGroup::symmetric(3);
  const auto a3 = make_subgroup(s3, {0, 3, 4});
  const auto t = transport_frame(s3, {0, 3, 4}, delta(a3.group, 0), {0, 3, 4});
  CHECK(t.subspace_dimension == 3);
  CHECK(t.on_subspace.is_parseval);
  CHECK(t.note.find("finite") != std::string::npos);

  const auto z4 = FiniteGroup::cyclic(4);
  const auto tz = transport_frame(z4, {0, 2}, vec({1, 0.5}), {0, 2});
  CHECK(tz.on_subgroup.lower_bound == doctest::Approx(0.25));
  CHECK(tz.bound_gap <= 1e-9);

  const auto whole = transport_frame(s3, all_elements(s3), vec({1, 0.2, 0, 0, 0.1, 0}), all_elements(s3));
  CHECK(whole.bound_gap <= 1e-12);
  CHECK(code_of([&] { transport_frame(z4, {0, 2}, vec({1, 1}), {0, 2}); }) == ErrorCode::kNotAFrameOnH);
}
