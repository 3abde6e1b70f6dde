#include "ftatlas/matrix_groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ftatlas/error.hpp"

namespace ftatlas {

IndefiniteForm IndefiniteForm::make(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw Error(ErrorCode::kBadParams, "indefinite form needs p, q >= 0 and p + q >= 1");
  return IndefiniteForm{p, q};
}

RationalMatrix IndefiniteForm::j() const {
  RationalMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, i) = static_cast<int>(i) < p ? 1 : -1;
  return m;
}

MembershipReport so_pq_membership(const RationalMatrix& x, const IndefiniteForm& form) {
  const std::size_t n = form.size();
  if (x.rows() != n || x.cols() != n)
    throw Error(ErrorCode::kSizeMismatch, "matrix is " + std::to_string(x.rows()) + "x" +
                                              std::to_string(x.cols()) + ", form needs " +
                                              std::to_string(n) + "x" + std::to_string(n));
  const RationalMatrix j = form.j();
  const RationalMatrix defect = x.transpose() * j + j * x;
  MembershipReport report;
  report.residual = defect.max_abs();
  report.member = defect.is_zero();

  const auto p = static_cast<std::size_t>(form.p);
  bool blocks = true;
  for (std::size_t r = 0; r < n && blocks; ++r)
    for (std::size_t c = 0; c < n && blocks; ++c) {
      const bool same_block = (r < p) == (c < p);
      // Diagonal blocks antisymmetric, off-diagonal blocks transposes.
      blocks = same_block ? x(r, c) == -x(c, r) : x(r, c) == x(c, r);
    }
  report.block_member = blocks;
  return report;
}

namespace {

MatrixLieElement element(std::string name, RationalMatrix m, std::optional<IndefiniteForm> form = std::nullopt) {
  return MatrixLieElement{std::move(name), std::move(m), form};
}

// 1-based entry assignment, matching the index sets used for B and Y.
void set1(RationalMatrix& m, int row, int col, int value) {
  m(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1)) = value;
}

void check_member(const MatrixLieElement& e) {
  if (e.form && !so_pq_membership(e.matrix, *e.form).member)
    throw Error(ErrorCode::kBadParams, e.name + " is not in so(p,q)");
}

}  // namespace

std::pair<MatrixLieElement, MatrixLieElement> so_pq_pair(int p, int q) {
  if (p < 2 || q < 1 || p + q <= 2)
    throw Error(ErrorCode::kBadParams, "so(p,q) pair needs p >= 2, q >= 1, p + q > 2");
  const auto form = IndefiniteForm::make(p, q);
  const std::size_t n = form.size();
  RationalMatrix b(n, n);
  set1(b, 1, p + 1, 1);
  set1(b, p + 1, 1, 1);
  RationalMatrix y(n, n);
  set1(y, 1, p, 1);
  set1(y, p, p + 1, 1);
  set1(y, p + 1, p, 1);
  set1(y, p, 1, -1);
  auto pair = std::make_pair(element("B", std::move(b), form), element("Y", std::move(y), form));
  check_member(pair.first);
  check_member(pair.second);
  return pair;
}

std::pair<MatrixLieElement, MatrixLieElement> so_p1_pair(int p) {
  auto [b, y] = so_pq_pair(p, 1);
  b.name = "A";
  y.name = "X";
  return {std::move(b), std::move(y)};
}

std::vector<MatrixLieElement> so_pq_basis(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2) throw Error(ErrorCode::kBadParams, "so(p,q) needs p + q >= 2");
  const auto form = IndefiniteForm::make(p, q);
  const std::size_t n = form.size();
  std::vector<MatrixLieElement> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool same_block = (static_cast<int>(a) < p) == (static_cast<int>(b) < p);
      RationalMatrix m(n, n);
      m(a, b) = 1;
      m(b, a) = same_block ? -1 : 1;
      const std::string label = (same_block ? "R" : "K") + std::to_string(a + 1) + "_" + std::to_string(b + 1);
      basis.push_back(element(label, std::move(m), form));
    }
  return basis;
}

std::vector<MatrixLieElement> sl2_basis() {
  RationalMatrix h(2, 2), e(2, 2), f(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  e(0, 1) = 1;
  f(1, 0) = 1;
  return {element("H", h), element("E", e), element("F", f)};
}

std::vector<MatrixLieElement> strictly_upper_basis(int n) {
  if (n < 2) throw Error(ErrorCode::kBadParams, "T(n) needs n >= 2");
  std::vector<MatrixLieElement> basis;
  const auto size = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      RationalMatrix m(size, size);
      m(i, j) = 1;
      basis.push_back(element("E" + std::to_string(i + 1) + "_" + std::to_string(j + 1), std::move(m)));
    }
  return basis;
}

std::vector<MatrixLieElement> shearlet_basis() {
  RationalMatrix d(2, 2), nil(2, 2);
  d(0, 0) = 1;
  d(1, 1) = Rational(1, 2);
  nil(0, 1) = 1;
  return {element("D", d), element("N", nil)};
}

namespace {

using Triplet = std::pair<std::size_t, Rational>;  // (row * n + col, value)

std::vector<Triplet> nonzeros(const RationalMatrix& m) {
  std::vector<Triplet> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out.emplace_back(r * m.cols() + c, m(r, c));
  return out;
}

SparseVector flatten(const std::vector<Triplet>& entries) {
  SparseVector v;
  for (const auto& [index, value] : entries) v.push_back_unchecked(index, value);
  return v;
}

// Sparse a*b - b*a for square matrices of size n.
SparseVector sparse_commutator(const std::vector<Triplet>& a, const std::vector<Triplet>& b, std::size_t n) {
  std::map<std::size_t, Rational> acc;
  auto accumulate = [&](const std::vector<Triplet>& lhs, const std::vector<Triplet>& rhs, int sign) {
    for (const auto& [li, lv] : lhs) {
      const std::size_t row = li / n, mid = li % n;
      for (const auto& [ri, rv] : rhs) {
        if (ri / n != mid) continue;
        acc[row * n + ri % n] += sign * lv * rv;
      }
    }
  };
  accumulate(a, b, 1);
  accumulate(b, a, -1);
  SparseVector v;
  for (auto& [index, value] : acc) v.push_back_unchecked(index, std::move(value));
  return v;
}

EchelonBasis span_of(const std::vector<MatrixLieElement>& elements, std::vector<std::vector<Triplet>>& sparse) {
  if (elements.empty()) throw Error(ErrorCode::kBadParams, "empty matrix span");
  const std::size_t n = elements.front().matrix.rows();
  EchelonBasis span(n * n);
  for (const auto& e : elements) {
    if (e.matrix.rows() != n || e.matrix.cols() != n)
      throw Error(ErrorCode::kSizeMismatch, "all matrices must share one square size");
    sparse.push_back(nonzeros(e.matrix));
    if (!span.insert(flatten(sparse.back())))
      throw Error(ErrorCode::kDependentSpan, e.name + " is a combination of earlier elements");
  }
  return span;
}

}  // namespace

LieAlgebra span_to_lie_algebra(const std::vector<MatrixLieElement>& elements, double tolerance) {
  std::vector<std::vector<Triplet>> sparse;
  const EchelonBasis span = span_of(elements, sparse);
  const std::size_t n = elements.front().matrix.rows();
  const std::size_t dim = elements.size();
  std::vector<SparseVector> upper;
  upper.reserve(dim * (dim - 1) / 2);
  std::vector<std::string> names;
  for (const auto& e : elements) names.push_back(e.name);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      const auto coords = span.coordinates(sparse_commutator(sparse[a], sparse[b], n));
      if (!coords)
        throw Error(ErrorCode::kNotClosed, "[" + names[a] + ", " + names[b] + "] leaves the span");
      upper.push_back(SparseVector::from_dense(*coords));
    }
  return LieAlgebra::from_upper_pairs(std::move(names), std::move(upper), tolerance);
}

LieVector matrix_coordinates(const std::vector<MatrixLieElement>& elements, const RationalMatrix& m) {
  std::vector<std::vector<Triplet>> sparse;
  const EchelonBasis span = span_of(elements, sparse);
  const auto coords = span.coordinates(flatten(nonzeros(m)));
  if (!coords) throw Error(ErrorCode::kNotClosed, "matrix lies outside the span");
  Eigen::VectorXd out(static_cast<Eigen::Index>(coords->size()));
  for (std::size_t i = 0; i < coords->size(); ++i) out[static_cast<Eigen::Index>(i)] = (*coords)[i].get_d();
  return LieVector(out);
}

std::vector<std::string> builtin_names() {
  return {"ax_b", "grelaud", "heisenberg", "sl2", "so_pq", "T_n", "shearlet_H", "rotation", "abelian"};
}

BuiltinAlgebra builtin_algebra(const std::string& name, const BuiltinParams& params) {
  auto rules = [](std::vector<std::string> names, std::vector<BracketRule> r) {
    return LieAlgebra::from_brackets(std::move(names), r);
  };
  if (name == "ax_b") return {rules({"A", "X"}, {{0, 1, {{1, 1}}}}), "[A,X] = X"};
  if (name == "grelaud") {
    if (sgn(params.beta) == 0) throw Error(ErrorCode::kBadParams, "Grelaud algebra needs beta != 0");
    const Rational b = params.beta;
    return {rules({"A", "Y1", "Y2"}, {{0, 1, {{1, 1}, {2, b}}}, {0, 2, {{1, -b}, {2, 1}}}}),
            "[A,Y1] = Y1 + beta Y2, [A,Y2] = -beta Y1 + Y2 with beta = " + to_string(b)};
  }
  if (name == "heisenberg") return {rules({"X1", "X2", "X3"}, {{0, 1, {{2, 1}}}}), "[X1,X2] = X3"};
  if (name == "rotation")
    return {rules({"A", "Y1", "Y2"}, {{0, 1, {{2, 1}}}, {0, 2, {{1, -1}}}}), "[A,Y1] = Y2, [A,Y2] = -Y1"};
  if (name == "abelian") {
    if (params.n < 1) throw Error(ErrorCode::kBadParams, "abelian algebra needs n >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= params.n; ++i) names.push_back("X" + std::to_string(i));
    return {rules(std::move(names), {}), "all brackets vanish"};
  }
  if (name == "sl2") return {span_to_lie_algebra(sl2_basis()), "H = diag(1,-1), E = E_12, F = E_21"};
  if (name == "so_pq") {
    if (params.p < 1 || params.q < 1 || params.p + params.q <= 2)
      throw Error(ErrorCode::kBadParams, "so(p,q) needs p, q >= 1 and p + q > 2");
    return {span_to_lie_algebra(so_pq_basis(params.p, params.q)),
            "so(" + std::to_string(params.p) + "," + std::to_string(params.q) +
                ") with rotations R_ab and boosts K_ab"};
  }
  if (name == "T_n") {
    if (params.n < 3) throw Error(ErrorCode::kBadParams, "T(n) needs n >= 3");
    return {span_to_lie_algebra(strictly_upper_basis(params.n)),
            "strictly upper triangular " + std::to_string(params.n) + "x" + std::to_string(params.n) +
                " matrices; (E1_2, E2_n, E1_n) is a Heisenberg triple"};
  }
  if (name == "shearlet_H")
    return {span_to_lie_algebra(shearlet_basis()),
            "D = diag(1, 1/2), N = E_12, [D,N] = N/2; the rescaled pair (2D, N) satisfies [2D,N] = N"};
  throw Error(ErrorCode::kUnknownName, "unknown builtin algebra '" + name + "'");
}

}  // namespace ftatlas
