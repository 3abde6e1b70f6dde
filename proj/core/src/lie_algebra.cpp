#include <algorithm>
#include <cmath>
#include <sstream>

#include "ftatlas/error.hpp"
#include "ftatlas/lie_algebra.hpp"

namespace ftatlas {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream out;
  out << "(" << i << ", " << j << ", " << k << ")";
  return out.str();
}

void require_dim(std::size_t n, std::size_t tensor_size) {
  if (n == 0) throw Error(ErrorCode::kBadParams, "algebra dimension must be positive");
  if (tensor_size != n * n * n)
    throw Error(ErrorCode::kDimMismatch, "structure tensor must have n^3 = " + std::to_string(n * n * n) +
                                             " entries, got " + std::to_string(tensor_size));
}

}  // namespace

LieVector LieVector::basis(std::size_t dim, std::size_t index) {
  LieVector v = zero(dim);
  v.coords[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

LieAlgebra LieAlgebra::from_tensor(std::vector<std::string> names, const std::vector<Rational>& tensor,
                                   double tolerance) {
  const std::size_t n = names.size();
  require_dim(n, tensor.size());
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
    return tensor[(i * n + j) * n + k];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational sum = c(i, j, k) + c(j, i, k);
        if (sgn(sum) != 0) {
          throw Error(ErrorCode::kAntisymmetryViolation,
                      "c[i][j][k] + c[j][i][k] != 0 at " + triple(i, j, k) + ", residual " +
                          to_string(sum));
        }
      }
  LieAlgebra g;
  g.names_ = std::move(names);
  g.mode_ = ScalarMode::kExact;
  g.tolerance_ = tolerance;
  g.exact_upper_.resize(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVector v;
      for (std::size_t k = 0; k < n; ++k) v.push_back_unchecked(k, c(i, j, k));
      g.exact_upper_[g.pair_index(i, j)] = std::move(v);
    }
  g.build_float_views();
  g.check_jacobi();
  return g;
}

LieAlgebra LieAlgebra::from_tensor(std::vector<std::string> names, const std::vector<double>& tensor,
                                   double tolerance) {
  const std::size_t n = names.size();
  require_dim(n, tensor.size());
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return tensor[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double sum = c(i, j, k) + c(j, i, k);
        if (!std::isfinite(sum) || std::fabs(sum) > tolerance) {
          throw Error(ErrorCode::kAntisymmetryViolation,
                      "c[i][j][k] + c[j][i][k] != 0 at " + triple(i, j, k) + ", residual " +
                          std::to_string(sum));
        }
      }
  LieAlgebra g;
  g.names_ = std::move(names);
  g.mode_ = ScalarMode::kFloat;
  g.tolerance_ = tolerance;
  g.float_upper_.resize(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& terms = g.float_upper_[g.pair_index(i, j)];
      for (std::size_t k = 0; k < n; ++k) {
        if (c(i, j, k) != 0.0) terms.emplace_back(k, c(i, j, k));
      }
    }
  g.build_float_views();
  g.check_jacobi();
  return g;
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> names, const std::vector<BracketRule>& rules,
                                     ScalarMode mode, double tolerance) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::kBadParams, "algebra dimension must be positive");
  std::vector<bool> seen(n * n, false);
  for (const auto& rule : rules) {
    if (rule.left >= n || rule.right >= n)
      throw Error(ErrorCode::kDimMismatch, "bracket refers to a basis index out of range");
    if (rule.left == rule.right) {
      bool nonzero = std::any_of(rule.result.begin(), rule.result.end(),
                                 [](const auto& t) { return sgn(t.second) != 0; });
      if (nonzero)
        throw Error(ErrorCode::kAntisymmetryViolation,
                    "[X, X] must vanish for basis element " + names[rule.left]);
      continue;
    }
    if (rule.left > rule.right)
      throw Error(ErrorCode::kBadParams, "bracket pairs must be listed with left < right");
    if (seen[rule.left * n + rule.right])
      throw Error(ErrorCode::kBadParams, "bracket [" + names[rule.left] + ", " + names[rule.right] +
                                             "] listed twice");
    seen[rule.left * n + rule.right] = true;
    for (const auto& term : rule.result) {
      if (term.first >= n) throw Error(ErrorCode::kDimMismatch, "bracket result index out of range");
    }
  }
  if (mode == ScalarMode::kExact) {
    std::vector<Rational> tensor(n * n * n);
    for (const auto& rule : rules) {
      if (rule.left == rule.right) continue;
      for (const auto& [k, value] : rule.result) {
        tensor[(rule.left * n + rule.right) * n + k] += value;
        tensor[(rule.right * n + rule.left) * n + k] -= value;
      }
    }
    return from_tensor(std::move(names), tensor, tolerance);
  }
  std::vector<double> tensor(n * n * n, 0.0);
  for (const auto& rule : rules) {
    if (rule.left == rule.right) continue;
    for (const auto& [k, value] : rule.result) {
      tensor[(rule.left * n + rule.right) * n + k] += value.get_d();
      tensor[(rule.right * n + rule.left) * n + k] -= value.get_d();
    }
  }
  return from_tensor(std::move(names), tensor, tolerance);
}

LieAlgebra LieAlgebra::from_upper_pairs(std::vector<std::string> names, std::vector<SparseVector> upper,
                                        double tolerance) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::kBadParams, "algebra dimension must be positive");
  if (upper.size() != n * (n - 1) / 2)
    throw Error(ErrorCode::kDimMismatch, "expected one bracket per pair i < j");
  for (const auto& v : upper) {
    if (!v.is_zero() && v.entries().back().first >= n)
      throw Error(ErrorCode::kDimMismatch, "bracket result index out of range");
  }
  LieAlgebra g;
  g.names_ = std::move(names);
  g.mode_ = ScalarMode::kExact;
  g.tolerance_ = tolerance;
  g.exact_upper_ = std::move(upper);
  g.build_float_views();
  g.check_jacobi();
  return g;
}

void LieAlgebra::build_float_views() {
  const std::size_t n = dim();
  if (mode_ == ScalarMode::kExact) {
    float_upper_.assign(exact_upper_.size(), {});
    for (std::size_t p = 0; p < exact_upper_.size(); ++p) {
      for (const auto& [k, value] : exact_upper_[p].entries()) float_upper_[p].emplace_back(k, value.get_d());
    }
  }
  ad_basis_.assign(n, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      for (const auto& [k, value] : float_upper_[pair_index(i, j)]) {
        const auto ki = static_cast<Eigen::Index>(k);
        ad_basis_[i](ki, static_cast<Eigen::Index>(j)) += value;
        ad_basis_[j](ki, static_cast<Eigen::Index>(i)) -= value;
      }
    }
}

void LieAlgebra::check_jacobi() const {
  const std::size_t n = dim();
  if (mode_ == ScalarMode::kExact) {
    std::vector<Rational> acc(n);
    std::vector<std::size_t> touched;
    Rational product;
    // acc += sign * [[X_a, X_b], X_c]
    auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
      const int outer = a < b ? 1 : -1;
      const SparseVector& inner = exact_upper_[pair_index(std::min(a, b), std::max(a, b))];
      for (const auto& [m, coeff] : inner.entries()) {
        if (m == c) continue;
        const int sign = outer * (m < c ? 1 : -1);
        for (const auto& [k, value] : exact_upper_[pair_index(std::min(m, c), std::max(m, c))].entries()) {
          product = coeff * value;
          if (sign > 0)
            acc[k] += product;
          else
            acc[k] -= product;
          touched.push_back(k);
        }
      }
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          touched.clear();
          nested(i, j, k);
          nested(j, k, i);
          nested(k, i, j);
          Rational worst = 0;
          for (std::size_t t : touched) {
            if (sgn(acc[t]) != 0) worst = std::max(worst, Rational(abs(acc[t])));
          }
          for (std::size_t t : touched) acc[t] = 0;
          if (sgn(worst) != 0) {
            throw Error(ErrorCode::kJacobiViolation,
                        "Jacobi identity fails on basis triple " + triple(i, j, k) + ", residual " +
                            to_string(worst));
          }
        }
    return;
  }
  const double scale = std::max(1.0, max_structure_constant());
  const double bound = tolerance_ * scale * scale;
  Eigen::VectorXd sum(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // [[X_a, X_b], X_c] = -ad(X_c) [X_a, X_b]
        sum = -ad_basis_[k] * ad_basis_[i].col(static_cast<Eigen::Index>(j)) -
              ad_basis_[i] * ad_basis_[j].col(static_cast<Eigen::Index>(k)) -
              ad_basis_[j] * ad_basis_[k].col(static_cast<Eigen::Index>(i));
        const double residual = sum.cwiseAbs().maxCoeff();
        if (!(residual <= bound)) {
          throw Error(ErrorCode::kJacobiViolation, "Jacobi identity fails on basis triple " +
                                                       triple(i, j, k) + ", residual " +
                                                       std::to_string(residual));
        }
      }
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

double LieAlgebra::structure(std::size_t i, std::size_t j, std::size_t k) const {
  return ad_basis_[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
}

SparseVector LieAlgebra::exact_bracket(std::size_t i, std::size_t j) const {
  if (mode_ != ScalarMode::kExact) throw Error(ErrorCode::kBadParams, "exact bracket needs exact scalars");
  if (i == j) return {};
  if (i < j) return exact_upper_[pair_index(i, j)];
  SparseVector v = exact_upper_[pair_index(j, i)];
  v.scale(-1);
  return v;
}

SparseVector LieAlgebra::exact_bracket(const SparseVector& x, const SparseVector& y) const {
  if (mode_ != ScalarMode::kExact) throw Error(ErrorCode::kBadParams, "exact bracket needs exact scalars");
  SparseVector out;
  for (const auto& [a, xa] : x.entries())
    for (const auto& [b, yb] : y.entries()) {
      if (a == b) continue;
      const Rational coeff = xa * yb;
      if (a < b)
        out.axpy(coeff, exact_upper_[pair_index(a, b)]);
      else
        out.axpy(-coeff, exact_upper_[pair_index(b, a)]);
    }
  return out;
}

bool LieAlgebra::is_abelian() const {
  if (mode_ == ScalarMode::kExact)
    return std::all_of(exact_upper_.begin(), exact_upper_.end(), [](const auto& v) { return v.is_zero(); });
  for (const auto& terms : float_upper_)
    for (const auto& t : terms)
      if (std::fabs(t.second) > tolerance_) return false;
  return true;
}

double LieAlgebra::max_structure_constant() const {
  double m = 0.0;
  for (const auto& terms : float_upper_)
    for (const auto& t : terms) m = std::max(m, std::fabs(t.second));
  return m;
}

LieAlgebra LieAlgebra::change_basis(const RationalMatrix& p, std::vector<std::string> names) const {
  const std::size_t n = dim();
  if (mode_ != ScalarMode::kExact) throw Error(ErrorCode::kBadParams, "basis change needs exact scalars");
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::kDimMismatch, "basis change matrix must be n x n");
  const RationalMatrix p_inv = p.inverse();
  if (names.empty()) {
    for (std::size_t a = 0; a < n; ++a) names.push_back("f" + std::to_string(a));
  }
  if (names.size() != n) throw Error(ErrorCode::kDimMismatch, "one name per basis element");
  std::vector<SparseVector> columns(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < n; ++i) columns[a].push_back_unchecked(i, p(i, a));
  }
  std::vector<SparseVector> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const SparseVector w = exact_bracket(columns[a], columns[b]);
      SparseVector coords;
      for (std::size_t r = 0; r < n; ++r) {
        Rational sum = 0;
        for (const auto& [k, value] : w.entries()) sum += p_inv(r, k) * value;
        coords.push_back_unchecked(r, sum);
      }
      upper.push_back(std::move(coords));
    }
  return from_upper_pairs(std::move(names), std::move(upper), tolerance_);
}

LieVector bracket(const LieAlgebra& g, const LieVector& x, const LieVector& y) {
  if (x.size() != g.dim() || y.size() != g.dim())
    throw Error(ErrorCode::kDimMismatch, "bracket operands must have the algebra's dimension");
  return LieVector(ad_matrix(g, x) * y.coords);
}

Eigen::MatrixXd ad_matrix(const LieAlgebra& g, const LieVector& x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw Error(ErrorCode::kDimMismatch, "ad operand must have the algebra's dimension");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != 0.0) m += x[i] * g.ad_basis(i);
  }
  return m;
}

}  // namespace ftatlas
