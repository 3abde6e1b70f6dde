#include <algorithm>
#include <cmath>
#include <random>

#include "ftatlas/error.hpp"
#include "ftatlas/lie_algebra.hpp"

namespace ftatlas {

namespace {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Relative thresholds for the internal rank decisions. The final flag
// step is accepted only if its residual is within the algebra tolerance.
constexpr double kClusterTol = 1e-3;
constexpr double kKernelTol = 1e-8;
constexpr double kScalarTol = 1e-9;

double op_scale(const CMatrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

// Orthonormal basis of {v : M v = 0}, singular values below
// tol * max(1, sigma_max) counting as zero.
CMatrix nullspace(const CMatrix& m, double tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return CMatrix::Identity(cols, cols);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double threshold = tol * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > threshold) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

// Largest subspace of span(K) that every operator maps into itself.
CMatrix largest_invariant(CMatrix k, const std::vector<CMatrix>& ops) {
  const Eigen::Index r = k.rows();
  for (;;) {
    const Eigen::Index s = k.cols();
    if (s == 0) return k;
    const CMatrix leak = CMatrix::Identity(r, r) - k * k.adjoint();
    CMatrix stacked(static_cast<Eigen::Index>(ops.size()) * r, s);
    double scale = 1.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      stacked.middleRows(static_cast<Eigen::Index>(i) * r, r) = leak * ops[i] * k;
      scale = std::max(scale, op_scale(ops[i]));
    }
    const CMatrix keep = nullspace(stacked / scale, kKernelTol);
    if (keep.cols() == s) return k;
    k = k * keep;
  }
}

bool all_scalar(const std::vector<CMatrix>& ops) {
  for (const auto& op : ops) {
    const Eigen::Index r = op.rows();
    const Complex mean = op.trace() / static_cast<double>(r);
    const CMatrix diff = op - mean * CMatrix::Identity(r, r);
    if (diff.cwiseAbs().maxCoeff() > kScalarTol * op_scale(op)) return false;
  }
  return true;
}

// Groups eigenvalues closer than the cluster tolerance (single linkage)
// and returns the cluster means in a deterministic order.
std::vector<Complex> cluster_means(const CVector& eig, double scale) {
  const Eigen::Index m = eig.size();
  std::vector<int> label(static_cast<std::size_t>(m), -1);
  int next = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (label[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<Eigen::Index> stack{i};
    label[static_cast<std::size_t>(i)] = next;
    while (!stack.empty()) {
      const Eigen::Index a = stack.back();
      stack.pop_back();
      for (Eigen::Index b = 0; b < m; ++b) {
        if (label[static_cast<std::size_t>(b)] < 0 && std::abs(eig[a] - eig[b]) <= kClusterTol * scale) {
          label[static_cast<std::size_t>(b)] = next;
          stack.push_back(b);
        }
      }
    }
    ++next;
  }
  std::vector<Complex> means(static_cast<std::size_t>(next), Complex(0.0, 0.0));
  std::vector<int> counts(static_cast<std::size_t>(next), 0);
  for (Eigen::Index i = 0; i < m; ++i) {
    means[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] += eig[i];
    ++counts[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])];
  }
  for (std::size_t c = 0; c < means.size(); ++c) means[c] /= static_cast<double>(counts[c]);
  std::sort(means.begin(), means.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return means;
}

struct Eigenpair {
  CVector vector;
  std::vector<Complex> values;
  double residual = 0.0;
};

double eigen_residual(const std::vector<CMatrix>& ops, const CVector& c, std::vector<Complex>& values) {
  double worst = 0.0;
  values.clear();
  for (const auto& op : ops) {
    const CVector image = op * c;
    const Complex lambda = c.dot(image);  // c is a unit vector
    values.push_back(lambda);
    worst = std::max(worst, (image - lambda * c).norm() / op_scale(op));
  }
  return worst;
}

// One attempt at a common eigenvector of a solvable family: shrink an
// invariant subspace through eigenspaces of random combinations until
// every operator acts on it as a scalar.
std::optional<Eigenpair> common_eigenvector_attempt(const std::vector<CMatrix>& ops, std::mt19937_64& rng,
                                                    double tolerance) {
  const Eigen::Index d = ops.front().rows();
  CMatrix u = CMatrix::Identity(d, d);
  for (Eigen::Index guard = 0; guard <= d + 1; ++guard) {
    std::vector<CMatrix> restricted;
    restricted.reserve(ops.size());
    for (const auto& op : ops) restricted.push_back(u.adjoint() * op * u);
    if (u.cols() == 1 || all_scalar(restricted)) {
      Eigenpair pair;
      pair.vector = u.col(0).normalized();
      pair.residual = eigen_residual(ops, pair.vector, pair.values);
      if (pair.residual <= tolerance) return pair;
      return std::nullopt;
    }
    const Eigen::Index r = u.cols();
    CMatrix combo = CMatrix::Zero(r, r);
    for (const auto& op : restricted) combo += random_rational(rng, 16).get_d() * op;
    const double scale = op_scale(combo);
    Eigen::ComplexEigenSolver<CMatrix> solver(combo, false);
    bool shrunk = false;
    for (const Complex mu : cluster_means(solver.eigenvalues(), scale)) {
      const CMatrix kernel = nullspace((combo - mu * CMatrix::Identity(r, r)) / scale, kKernelTol);
      const CMatrix invariant = largest_invariant(kernel, restricted);
      if (invariant.cols() > 0 && invariant.cols() < r) {
        u = u * invariant;
        shrunk = true;
        break;
      }
    }
    if (!shrunk) return std::nullopt;
  }
  return std::nullopt;
}

// Orthonormal complement of the columns of q inside C^n.
CMatrix complement(const CMatrix& q, Eigen::Index n) {
  if (q.cols() == 0) return CMatrix::Identity(n, n);
  Eigen::HouseholderQR<CMatrix> qr(q);
  const CMatrix full = qr.householderQ() * CMatrix::Identity(n, n);
  return full.rightCols(n - q.cols());
}

}  // namespace

RootSystem complexified_roots(const LieAlgebra& g, const RootOptions& options) {
  if (!is_solvable(g)) throw Error(ErrorCode::kNotSolvable, "roots need a solvable algebra");
  const auto n = static_cast<Eigen::Index>(g.dim());
  std::vector<CMatrix> ad;
  for (std::size_t i = 0; i < g.dim(); ++i) ad.push_back(g.ad_basis(i).cast<Complex>());

  std::mt19937_64 rng(options.seed);
  RootSystem system;
  CMatrix flag(n, 0);
  for (Eigen::Index k = 0; k < n; ++k) {
    const CMatrix w = complement(flag, n);
    std::vector<CMatrix> quotient;
    for (const auto& op : ad) quotient.push_back(w.adjoint() * op * w);
    std::optional<Eigenpair> found;
    while (!found) {
      if (system.attempts >= options.retries)
        throw Error(ErrorCode::kFlagSearchFailed,
                    "no common eigenvector at flag step " + std::to_string(k) + " after " +
                        std::to_string(options.retries) + " attempts");
      ++system.attempts;
      found = common_eigenvector_attempt(quotient, rng, g.tolerance());
    }
    Root root;
    root.real_part.resize(n);
    root.imag_part.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      root.real_part[i] = found->values[static_cast<std::size_t>(i)].real();
      root.imag_part[i] = found->values[static_cast<std::size_t>(i)].imag();
    }
    system.roots.push_back(std::move(root));
    system.step_residuals.push_back(found->residual);
    CMatrix extended(n, k + 1);
    extended << flag, w * found->vector;
    flag = std::move(extended);
  }
  system.flag = flag;
  return system;
}

namespace {

// Decision threshold for classifying computed roots; looser than the
// per-step residual bound since roots inherit the conditioning of the flag.
double root_threshold(const LieAlgebra& g, const Root& root) {
  const double scale = std::max({1.0, root.real_part.norm(), root.imag_part.norm()});
  return 1e3 * g.tolerance() * scale;
}

}  // namespace

ExponentialTest is_exponential(const LieAlgebra& g, const RootSystem& roots) {
  ExponentialTest result;
  for (const auto& root : roots.roots) {
    const double threshold = root_threshold(g, root);
    const double re_norm = root.real_part.norm();
    bool ok;
    if (re_norm <= threshold) {
      ok = root.imag_part.norm() <= threshold;
    } else {
      const double alpha = root.imag_part.dot(root.real_part) / (re_norm * re_norm);
      ok = (root.imag_part - alpha * root.real_part).norm() <= threshold;
    }
    if (!ok) {
      result.exponential = false;
      result.offending_root = root;
      return result;
    }
  }
  return result;
}

ExponentialTest is_exponential(const LieAlgebra& g, const RootOptions& options) {
  return is_exponential(g, complexified_roots(g, options));
}

bool is_type_R(const LieAlgebra& g, const RootSystem& roots) {
  return std::all_of(roots.roots.begin(), roots.roots.end(),
                     [&](const Root& r) { return r.real_part.norm() <= root_threshold(g, r); });
}

bool is_type_R(const LieAlgebra& g, const RootOptions& options) {
  return is_type_R(g, complexified_roots(g, options));
}

}  // namespace ftatlas
