#pragma once

// Finite-dimensional real Lie algebras given by structure constants,
// together with their series, nilpotency/solvability predicates and the
// roots of the complexified adjoint action.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftatlas/exact.hpp"

namespace ftatlas {

inline constexpr double kDefaultTolerance = 1e-9;

enum class ScalarMode { kExact, kFloat };

/// Coordinates of an algebra element in the algebra's basis.
struct LieVector {
  Eigen::VectorXd coords;

  LieVector() = default;
  explicit LieVector(Eigen::VectorXd c) : coords(std::move(c)) {}
  static LieVector basis(std::size_t dim, std::size_t index);
  static LieVector zero(std::size_t dim) { return LieVector(Eigen::VectorXd::Zero(dim)); }

  std::size_t size() const { return static_cast<std::size_t>(coords.size()); }
  double operator[](std::size_t i) const { return coords[static_cast<Eigen::Index>(i)]; }

  friend LieVector operator+(const LieVector& a, const LieVector& b) { return LieVector(a.coords + b.coords); }
  friend LieVector operator-(const LieVector& a, const LieVector& b) { return LieVector(a.coords - b.coords); }
  friend LieVector operator*(double s, const LieVector& a) { return LieVector(s * a.coords); }
};

/// One nonzero bracket [X_left, X_right] = sum coefficient * X_index, with
/// left < right. Used by JSON input where antisymmetry is implied.
struct BracketRule {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::pair<std::size_t, Rational>> result;
};

class LieAlgebra {
 public:
  /// Full n*n*n tensor, index (i*n + j)*n + k holds c[i][j][k]. Both
  /// antisymmetry and the Jacobi identity are checked exactly.
  static LieAlgebra from_tensor(std::vector<std::string> names, const std::vector<Rational>& tensor,
                                double tolerance = kDefaultTolerance);
  /// Floating-point variant; identities are checked within `tolerance`.
  static LieAlgebra from_tensor(std::vector<std::string> names, const std::vector<double>& tensor,
                                double tolerance = kDefaultTolerance);
  /// Brackets for i < j only. In float mode the rationals are rounded.
  static LieAlgebra from_brackets(std::vector<std::string> names, const std::vector<BracketRule>& rules,
                                  ScalarMode mode = ScalarMode::kExact,
                                  double tolerance = kDefaultTolerance);
  /// Exact constants given sparsely for every pair i < j (row-major over
  /// the strict upper triangle). Only the Jacobi identity is checked.
  static LieAlgebra from_upper_pairs(std::vector<std::string> names, std::vector<SparseVector> upper,
                                     double tolerance = kDefaultTolerance);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  ScalarMode mode() const { return mode_; }
  double tolerance() const { return tolerance_; }

  /// c[i][j][k]
  double structure(std::size_t i, std::size_t j, std::size_t k) const;
  /// Exact [X_i, X_j]; only available in exact mode.
  SparseVector exact_bracket(std::size_t i, std::size_t j) const;
  /// Exact bracket of two rational coordinate vectors (exact mode only).
  SparseVector exact_bracket(const SparseVector& x, const SparseVector& y) const;
  /// ad(X_i) as a dense matrix.
  const Eigen::MatrixXd& ad_basis(std::size_t i) const { return ad_basis_[i]; }
  bool is_abelian() const;
  /// Largest |c[i][j][k]|.
  double max_structure_constant() const;

  /// Re-expresses the algebra in the basis f_a = sum_i P(i,a) X_i.
  /// Exact mode only; P must be invertible.
  LieAlgebra change_basis(const RationalMatrix& p, std::vector<std::string> names = {}) const;

 private:
  LieAlgebra() = default;
  void build_float_views();
  void check_jacobi() const;

  std::vector<std::string> names_;
  ScalarMode mode_ = ScalarMode::kExact;
  double tolerance_ = kDefaultTolerance;
  // Upper-triangle storage, pair (i, j) with i < j at pair_index(i, j).
  std::vector<SparseVector> exact_upper_;
  std::vector<std::vector<std::pair<std::size_t, double>>> float_upper_;
  std::vector<Eigen::MatrixXd> ad_basis_;

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }
};

/// Bilinear bracket from the structure constants.
LieVector bracket(const LieAlgebra& g, const LieVector& x, const LieVector& y);
/// Column j is [X, X_j].
Eigen::MatrixXd ad_matrix(const LieAlgebra& g, const LieVector& x);

enum class SeriesKind { kLowerCentral, kDerived };

struct SeriesChain {
  SeriesKind kind = SeriesKind::kLowerCentral;
  /// Spanning sets of each term as matrix columns (basis coordinates).
  std::vector<Eigen::MatrixXd> subspaces;
  /// Term dimensions; the computation stops at the first repeat, which is
  /// not appended.
  std::vector<std::size_t> dims;

  std::size_t terminal_dim() const { return dims.back(); }
};

SeriesChain lower_central_series(const LieAlgebra& g);
SeriesChain derived_series(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);

/// Checks ad(X)^n = 0 on every basis element and on `samples` seeded
/// random rational combinations.
bool engel_spot_check(const LieAlgebra& g, int samples, std::uint64_t seed);

/// Linear form on the complexification, stored by its values on the real
/// basis.
struct Root {
  Eigen::VectorXd real_part;
  Eigen::VectorXd imag_part;

  std::complex<double> evaluate(const LieVector& x) const {
    return {real_part.dot(x.coords), imag_part.dot(x.coords)};
  }
};

struct RootOptions {
  std::uint64_t seed = 0;
  int retries = 32;
};

struct RootSystem {
  /// Roots along the flag, with multiplicity, bottom first.
  std::vector<Root> roots;
  /// Unitary n x n matrix; its first k columns span the k-th flag term.
  Eigen::MatrixXcd flag;
  /// Invariance residual of each flag step.
  std::vector<double> step_residuals;
  int attempts = 0;
};

/// Full ad-invariant flag of the complexification with its roots.
/// Throws kNotSolvable or kFlagSearchFailed.
RootSystem complexified_roots(const LieAlgebra& g, const RootOptions& options = {});

struct ExponentialTest {
  bool exponential = true;
  std::optional<Root> offending_root;
};

/// True iff every root has the shape X -> lambda(X)(1 + i alpha).
ExponentialTest is_exponential(const LieAlgebra& g, const RootOptions& options = {});
ExponentialTest is_exponential(const LieAlgebra& g, const RootSystem& roots);
/// True iff every root has zero real part. Rejects non-solvable input.
bool is_type_R(const LieAlgebra& g, const RootOptions& options = {});
bool is_type_R(const LieAlgebra& g, const RootSystem& roots);

}  // namespace ftatlas
