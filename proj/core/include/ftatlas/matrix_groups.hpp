#pragma once

// Explicit matrix Lie algebras built with exact integer/rational entries:
// so(p,q) and its ax+b pairs, sl(2,R), strictly upper triangular T(n,R),
// the shearlet dilation algebra, plus the named builtin algebras.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftatlas/exact.hpp"
#include "ftatlas/lie_algebra.hpp"

namespace ftatlas {

/// J = diag(1,...,1,-1,...,-1) with p plus signs and q minus signs.
struct IndefiniteForm {
  int p = 1;
  int q = 1;

  static IndefiniteForm make(int p, int q);
  std::size_t size() const { return static_cast<std::size_t>(p + q); }
  RationalMatrix j() const;
};

struct MatrixLieElement {
  std::string name;
  RationalMatrix matrix;
  std::optional<IndefiniteForm> form;
};

struct MembershipReport {
  bool member = false;        // X^T J + J X = 0
  double residual = 0.0;      // max |X^T J + J X|
  bool block_member = false;  // [[Z, S], [S^T, Y]] with Z, Y antisymmetric
};

MembershipReport so_pq_membership(const RationalMatrix& x, const IndefiniteForm& form);

/// (A, X) in so(p,1) with [A, X] = X. Requires p >= 2.
std::pair<MatrixLieElement, MatrixLieElement> so_p1_pair(int p);
/// (B, Y) in so(p,q) with [B, Y] = Y. Requires p >= 2 and p + q > 2.
std::pair<MatrixLieElement, MatrixLieElement> so_pq_pair(int p, int q);

/// Rotations R_ab = E_ab - E_ba inside a block and boosts K_ab = E_ab + E_ba
/// across blocks, for a < b.
std::vector<MatrixLieElement> so_pq_basis(int p, int q);
std::vector<MatrixLieElement> sl2_basis();
/// E_ij for i < j, ordered lexicographically (1-based names).
std::vector<MatrixLieElement> strictly_upper_basis(int n);
/// D = diag(1, 1/2) and N = E_12.
std::vector<MatrixLieElement> shearlet_basis();

/// Structure constants of the span of `elements`, read off from
/// commutators. Throws kDependentSpan or kNotClosed.
LieAlgebra span_to_lie_algebra(const std::vector<MatrixLieElement>& elements,
                               double tolerance = kDefaultTolerance);
/// Coordinates of `m` in the span of `elements` (kNotClosed if outside).
LieVector matrix_coordinates(const std::vector<MatrixLieElement>& elements, const RationalMatrix& m);

struct BuiltinParams {
  Rational beta = 1;  // grelaud
  int p = 2;          // so_pq
  int q = 1;
  int n = 3;          // T_n, abelian
};

struct BuiltinAlgebra {
  LieAlgebra algebra;
  std::string note;
};

/// Names: ax_b, grelaud, heisenberg, sl2, so_pq, T_n, shearlet_H,
/// rotation, abelian. Throws kUnknownName or kBadParams.
BuiltinAlgebra builtin_algebra(const std::string& name, const BuiltinParams& params = {});
std::vector<std::string> builtin_names();

}  // namespace ftatlas
