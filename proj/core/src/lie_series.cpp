#include <cmath>
#include <random>

#include "ftatlas/error.hpp"
#include "ftatlas/lie_algebra.hpp"

namespace ftatlas {

namespace {

// Floating-point counterpart of EchelonBasis: Gram-Schmidt with one
// reorthogonalization pass.
class OrthonormalSpan {
 public:
  OrthonormalSpan(std::size_t n, double tolerance) : n_(n), tolerance_(tolerance) {}

  bool insert(const Eigen::VectorXd& v) {
    Eigen::VectorXd r = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis_) r -= q.dot(r) * q;
    const double norm = r.norm();
    if (norm <= tolerance_ * std::max(1.0, v.norm())) return false;
    basis_.push_back(r / norm);
    return true;
  }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Eigen::VectorXd>& basis() const { return basis_; }

  Eigen::MatrixXd matrix() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t c = 0; c < basis_.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = basis_[c];
    return m;
  }

 private:
  std::size_t n_;
  double tolerance_;
  std::vector<Eigen::VectorXd> basis_;
};

Eigen::MatrixXd to_columns(const std::vector<SparseVector>& vectors, std::size_t n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c)
    for (const auto& [i, value] : vectors[c].entries())
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = value.get_d();
  return m;
}

SeriesChain exact_series(const LieAlgebra& g, SeriesKind kind) {
  const std::size_t n = g.dim();
  SeriesChain chain;
  chain.kind = kind;
  std::vector<SparseVector> whole;
  for (std::size_t i = 0; i < n; ++i) whole.push_back(SparseVector::unit(i));
  std::vector<SparseVector> term = whole;
  chain.subspaces.push_back(to_columns(term, n));
  chain.dims.push_back(n);
  while (!term.empty()) {
    const std::size_t previous = term.size();
    EchelonBasis next(n);
    const auto& left = kind == SeriesKind::kLowerCentral ? whole : term;
    for (std::size_t a = 0; a < left.size() && next.rank() < previous; ++a) {
      const std::size_t b_start = kind == SeriesKind::kDerived ? a + 1 : 0;
      for (std::size_t b = b_start; b < term.size() && next.rank() < previous; ++b) {
        next.insert(g.exact_bracket(left[a], term[b]));
      }
    }
    // Terms are nested, so equal rank means the chain has stabilized.
    if (next.rank() == previous) break;
    term = next.accepted();
    chain.subspaces.push_back(to_columns(term, n));
    chain.dims.push_back(term.size());
  }
  return chain;
}

SeriesChain float_series(const LieAlgebra& g, SeriesKind kind) {
  const std::size_t n = g.dim();
  const double tol = g.tolerance() * std::max(1.0, g.max_structure_constant());
  SeriesChain chain;
  chain.kind = kind;
  std::vector<Eigen::VectorXd> whole;
  for (std::size_t i = 0; i < n; ++i) whole.push_back(LieVector::basis(n, i).coords);
  std::vector<Eigen::VectorXd> term = whole;
  chain.subspaces.push_back(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  chain.dims.push_back(n);
  while (!term.empty()) {
    const std::size_t previous = term.size();
    OrthonormalSpan next(n, tol);
    const auto& left = kind == SeriesKind::kLowerCentral ? whole : term;
    for (std::size_t a = 0; a < left.size() && next.rank() < previous; ++a) {
      const Eigen::MatrixXd ad = ad_matrix(g, LieVector(left[a]));
      const std::size_t b_start = kind == SeriesKind::kDerived ? a + 1 : 0;
      for (std::size_t b = b_start; b < term.size() && next.rank() < previous; ++b) {
        next.insert(ad * term[b]);
      }
    }
    if (next.rank() == previous) break;
    term = next.basis();
    chain.subspaces.push_back(next.matrix());
    chain.dims.push_back(term.size());
  }
  return chain;
}

}  // namespace

SeriesChain lower_central_series(const LieAlgebra& g) {
  return g.mode() == ScalarMode::kExact ? exact_series(g, SeriesKind::kLowerCentral)
                                        : float_series(g, SeriesKind::kLowerCentral);
}

SeriesChain derived_series(const LieAlgebra& g) {
  return g.mode() == ScalarMode::kExact ? exact_series(g, SeriesKind::kDerived)
                                        : float_series(g, SeriesKind::kDerived);
}

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).terminal_dim() == 0; }

bool is_solvable(const LieAlgebra& g) { return derived_series(g).terminal_dim() == 0; }

namespace {

bool exact_ad_nilpotent(const LieAlgebra& g, const std::vector<Rational>& x) {
  const std::size_t n = g.dim();
  const SparseVector xs = SparseVector::from_dense(x);
  RationalMatrix ad(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const SparseVector column = g.exact_bracket(xs, SparseVector::unit(j));
    for (const auto& [k, value] : column.entries()) ad(k, j) = value;
  }
  RationalMatrix power = ad;
  for (std::size_t step = 1; step < n && !power.is_zero(); ++step) power = power * ad;
  return power.is_zero();
}

bool float_ad_nilpotent(const LieAlgebra& g, const Eigen::VectorXd& x) {
  const Eigen::MatrixXd ad = ad_matrix(g, LieVector(x));
  const double scale = std::max(1.0, ad.cwiseAbs().maxCoeff());
  Eigen::MatrixXd power = ad / scale;
  for (std::size_t step = 1; step < g.dim(); ++step) power = power * (ad / scale);
  return power.cwiseAbs().maxCoeff() <= g.tolerance();
}

}  // namespace

bool engel_spot_check(const LieAlgebra& g, int samples, std::uint64_t seed) {
  const std::size_t n = g.dim();
  std::mt19937_64 rng(seed);
  auto check = [&](const std::vector<Rational>& x) {
    if (g.mode() == ScalarMode::kExact) return exact_ad_nilpotent(g, x);
    Eigen::VectorXd xd(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) xd[static_cast<Eigen::Index>(i)] = x[i].get_d();
    return float_ad_nilpotent(g, xd);
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> x(n);
    x[i] = 1;
    if (!check(x)) return false;
  }
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> x(n);
    for (auto& xi : x) xi = random_rational(rng, 16);
    if (!check(x)) return false;
  }
  return true;
}

}  // namespace ftatlas
