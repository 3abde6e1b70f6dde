#include "ftatlas/subalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "ftatlas/error.hpp"

namespace ftatlas {

std::string_view witness_kind_name(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::kAxB: return "AX_B";
    case WitnessKind::kGrelaud: return "GRELAUD";
    case WitnessKind::kHeisenberg: return "HEISENBERG";
  }
  return "?";
}

namespace {

double generator_scale(const LieAlgebra& g, const std::vector<LieVector>& gens) {
  double norm = 0.0;
  for (const auto& v : gens) norm = std::max(norm, v.coords.norm());
  return std::max(1.0, norm * norm * std::max(1.0, g.max_structure_constant()));
}

// Replaces coordinates lying within 1e-12 of a fraction with small
// denominator by that fraction.
Eigen::VectorXd snap(const Eigen::VectorXd& v) {
  Eigen::VectorXd out = v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    for (int den = 1; den <= 12; ++den) {
      const double candidate = std::round(v[i] * den) / den;
      if (std::fabs(candidate - v[i]) <= 1e-12 * std::max(1.0, std::fabs(v[i]))) {
        out[i] = candidate;
        break;
      }
    }
  }
  return out;
}

template <typename Matrix>
Matrix null_basis(const Matrix& m, double tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double threshold = tol * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > threshold) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

constexpr double kNullTol = 1e-8;

std::vector<Eigen::VectorXd> candidates(const LieAlgebra& g, const SearchOptions& options) {
  const std::size_t n = g.dim();
  std::vector<Eigen::VectorXd> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(LieVector::basis(n, i).coords);
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < options.trials; ++t) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = random_rational(rng, 16).get_d();
    out.push_back(x);
  }
  return out;
}

std::optional<SubalgebraWitness> try_real_case(const LieAlgebra& g, const Eigen::VectorXd& x) {
  const double tol = g.tolerance();
  const Eigen::MatrixXd ad = ad_matrix(g, LieVector(x));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(ad, false);
  std::vector<double> reals;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const auto mu = solver.eigenvalues()[i];
    if (std::fabs(mu.imag()) <= tol * std::max(1.0, std::fabs(mu.real())) && std::fabs(mu.real()) > tol)
      reals.push_back(mu.real());
  }
  std::sort(reals.begin(), reals.end(), [](double a, double b) {
    if (std::fabs(a) != std::fabs(b)) return std::fabs(a) > std::fabs(b);
    return a > b;
  });
  const auto n = ad.rows();
  for (double lambda : reals) {
    const Eigen::MatrixXd kernel = null_basis<Eigen::MatrixXd>(
        (ad - lambda * Eigen::MatrixXd::Identity(n, n)) / std::max(1.0, ad.cwiseAbs().maxCoeff()), kNullTol);
    if (kernel.cols() == 0) continue;
    Eigen::VectorXd y = kernel.col(0);
    Eigen::Index pivot = 0;
    y.cwiseAbs().maxCoeff(&pivot);
    y /= y[pivot];
    SubalgebraWitness w;
    w.kind = WitnessKind::kAxB;
    w.generators = {LieVector(x / lambda), LieVector(y)};
    const std::vector<LieVector> snapped = {LieVector(snap(x / lambda)), LieVector(snap(y))};
    auto residual = [&](const std::vector<LieVector>& gens) {
      return (bracket(g, gens[0], gens[1]) - gens[1]).coords.cwiseAbs().maxCoeff();
    };
    if (residual(snapped) <= residual(w.generators)) w.generators = snapped;
    w.residual = residual(w.generators);
    if (w.residual <= tol * generator_scale(g, w.generators)) return w;
  }
  return std::nullopt;
}

enum class ComplexOutcome { kNone, kNoncommuting };

std::optional<SubalgebraWitness> try_complex_case(const LieAlgebra& g, const Eigen::VectorXd& x,
                                                  ComplexOutcome& outcome) {
  using CMatrix = Eigen::MatrixXcd;
  const double tol = g.tolerance();
  const Eigen::MatrixXd ad = ad_matrix(g, LieVector(x));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(ad, false);
  std::vector<std::complex<double>> values;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const auto mu = solver.eigenvalues()[i];
    if (mu.imag() > tol * std::max(1.0, std::fabs(mu.real())) && std::fabs(mu.real()) > tol)
      values.push_back(mu);
  }
  std::sort(values.begin(), values.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return std::fabs(a.real()) > std::fabs(b.real());
    return a.imag() > b.imag();
  });
  const auto n = ad.rows();
  const CMatrix adc = ad.cast<std::complex<double>>();
  for (const auto mu : values) {
    const CMatrix kernel = null_basis<CMatrix>(
        (adc - mu * CMatrix::Identity(n, n)) / std::max(1.0, ad.cwiseAbs().maxCoeff()), kNullTol);
    if (kernel.cols() == 0) continue;
    Eigen::VectorXcd v = kernel.col(0);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    v /= v[pivot];
    const double alpha = mu.real();
    const double beta = mu.imag();
    // ad(X)(Y1' + iY2') = (alpha + i beta)(Y1' + iY2'); Y2 = -Y2' puts the
    // relations in the [A,Y1] = Y1 + beta Y2, [A,Y2] = -beta Y1 + Y2 form.
    std::vector<LieVector> gens = {LieVector(x / alpha), LieVector(v.real()), LieVector(-v.imag())};
    std::vector<LieVector> snapped = {LieVector(snap(gens[0].coords)), LieVector(snap(gens[1].coords)),
                                      LieVector(snap(gens[2].coords))};
    const double ratio = beta / alpha;
    auto residual = [&](const std::vector<LieVector>& q) {
      const double r1 = (bracket(g, q[0], q[1]) - q[1] - ratio * q[2]).coords.cwiseAbs().maxCoeff();
      const double r2 = (bracket(g, q[0], q[2]) + ratio * q[1] - q[2]).coords.cwiseAbs().maxCoeff();
      return std::max(r1, r2);
    };
    if (residual(snapped) <= residual(gens)) gens = snapped;
    const double scale = generator_scale(g, gens);
    if (residual(gens) > tol * scale) continue;
    const double commutator = bracket(g, gens[1], gens[2]).coords.cwiseAbs().maxCoeff();
    if (commutator > tol * scale) {
      outcome = ComplexOutcome::kNoncommuting;
      continue;
    }
    SubalgebraWitness w;
    w.kind = WitnessKind::kGrelaud;
    w.beta = ratio;
    w.generators = std::move(gens);
    w.residual = std::max(residual(w.generators), commutator);
    return w;
  }
  return std::nullopt;
}

}  // namespace

SubalgebraWitness find_ax_b_or_grelaud(const LieAlgebra& g, const SearchOptions& options) {
  const auto list = candidates(g, options);
  for (std::size_t t = 0; t < list.size(); ++t) {
    if (auto w = try_real_case(g, list[t])) {
      w->seed = options.seed;
      w->trial_index = static_cast<int>(t);
      w->residual = verify_subalgebra_template(g, w->generators, w->kind).residual;
      return *w;
    }
  }
  ComplexOutcome outcome = ComplexOutcome::kNone;
  for (std::size_t t = 0; t < list.size(); ++t) {
    if (auto w = try_complex_case(g, list[t], outcome)) {
      w->seed = options.seed;
      w->trial_index = static_cast<int>(t);
      w->residual = verify_subalgebra_template(g, w->generators, w->kind, w->beta).residual;
      return *w;
    }
  }
  if (outcome == ComplexOutcome::kNoncommuting)
    throw Error(ErrorCode::kNoncommutingPair,
                "complex eigenvalues with nonzero real part were found, but the real and imaginary "
                "parts of every eigenvector failed to commute");
  throw Error(ErrorCode::kNoWitnessFound,
              "no ad(X) with a non-imaginary eigenvalue among " + std::to_string(list.size()) + " candidates");
}

TemplateReport verify_subalgebra_template(const LieAlgebra& g, const std::vector<LieVector>& generators,
                                          WitnessKind kind, double beta) {
  const std::size_t n = g.dim();
  for (const auto& v : generators) {
    if (v.size() != n) throw Error(ErrorCode::kDimMismatch, "generator dimension differs from the algebra");
  }
  const std::size_t expected = kind == WitnessKind::kAxB ? 2 : 3;
  if (generators.size() != expected)
    throw Error(ErrorCode::kTemplateMismatch, std::string(witness_kind_name(kind)) + " needs " +
                                                  std::to_string(expected) + " generators");
  if (kind == WitnessKind::kGrelaud && beta == 0.0)
    throw Error(ErrorCode::kTemplateMismatch, "Grelaud parameter must be nonzero");

  const double scale = generator_scale(g, generators);
  const double tol = g.tolerance() * scale;
  Eigen::MatrixXd span(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(expected));
  for (std::size_t a = 0; a < expected; ++a) span.col(static_cast<Eigen::Index>(a)) = generators[a].coords;
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(span);
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(span);
    const auto& sv = svd.singularValues();
    if (sv[sv.size() - 1] <= g.tolerance() * std::max(1.0, sv[0]))
      throw Error(ErrorCode::kTemplateMismatch, "generators are linearly dependent");
  }

  TemplateReport report;
  std::vector<std::vector<LieVector>> brackets(expected, std::vector<LieVector>(expected));
  for (std::size_t a = 0; a < expected; ++a)
    for (std::size_t b = a + 1; b < expected; ++b) {
      brackets[a][b] = bracket(g, generators[a], generators[b]);
      const Eigen::VectorXd coeffs = qr.solve(brackets[a][b].coords);
      const double miss = (span * coeffs - brackets[a][b].coords).cwiseAbs().maxCoeff();
      report.closure_residual = std::max(report.closure_residual, miss);
    }
  if (report.closure_residual > tol)
    throw Error(ErrorCode::kNotClosed, "span of the generators is not closed under the bracket (residual " +
                                           std::to_string(report.closure_residual) + ")");

  auto miss = [](const LieVector& lhs, const LieVector& rhs) { return (lhs - rhs).coords.cwiseAbs().maxCoeff(); };
  const auto& gen = generators;
  const LieVector zero = LieVector::zero(n);
  switch (kind) {
    case WitnessKind::kAxB:
      report.template_residual = miss(brackets[0][1], gen[1]);
      break;
    case WitnessKind::kGrelaud:
      report.template_residual = std::max({miss(brackets[0][1], gen[1] + beta * gen[2]),
                                           miss(brackets[0][2], gen[2] - beta * gen[1]),
                                           miss(brackets[1][2], zero)});
      break;
    case WitnessKind::kHeisenberg:
      report.template_residual = std::max({miss(brackets[0][1], gen[2]), miss(brackets[0][2], zero),
                                           miss(brackets[1][2], zero)});
      break;
  }
  if (report.template_residual > tol)
    throw Error(ErrorCode::kTemplateMismatch, std::string(witness_kind_name(kind)) +
                                                  " relations fail (residual " +
                                                  std::to_string(report.template_residual) + ")");
  report.residual = report.template_residual;
  return report;
}

}  // namespace ftatlas
