#pragma once

// Exact rational linear algebra used wherever a rank decision must not
// depend on floating-point thresholds (series ranks, bracket closure,
// matrix identities).

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ftatlas {

using Rational = mpq_class;

/// Parses "p", "p/q", or a decimal literal ("0.25", "-1e-3") exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);
double to_double(const Rational& value);

/// Uniform rational with |numerator| <= bound and 1 <= denominator <= bound.
Rational random_rational(std::mt19937_64& rng, int bound);

/// Sorted (index, value) pairs with no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  static SparseVector from_dense(const std::vector<Rational>& dense);
  static SparseVector unit(std::size_t index, Rational value = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t leading_index() const { return entries_.front().first; }
  Rational at(std::size_t index) const;

  /// this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  void scale(const Rational& factor);
  void push_back_unchecked(std::size_t index, Rational value);

  std::vector<Rational> to_dense(std::size_t size) const;
  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

/// Incrementally maintained row-echelon basis of a subspace of Q^n.
/// Each stored row remembers its expansion in the accepted input vectors,
/// so coordinates of a member vector can be recovered exactly.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v when it is independent of the current span. Returns whether
  /// the rank grew.
  bool insert(const SparseVector& v);

  /// Component of v left after eliminating all pivots; zero iff v is in
  /// the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

  /// Coefficients of v in terms of the accepted inputs, in insertion
  /// order, or nullopt when v lies outside the span.
  std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const;

  /// The accepted input vectors, in insertion order.
  const std::vector<SparseVector>& accepted() const { return accepted_; }

 private:
  struct Row {
    SparseVector vector;       // leading entry at `pivot`
    SparseVector combination;  // expansion over accepted_
  };

  std::pair<SparseVector, SparseVector> reduce_tracked(const SparseVector& v) const;

  std::size_t ambient_dim_;
  std::vector<std::size_t> pivots_;  // sorted, parallel to rows_
  std::vector<Row> rows_;
  std::vector<SparseVector> accepted_;
};

/// Dense exact matrix for small identities (commutators, basis changes,
/// ad powers).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalMatrix transpose() const;
  bool is_zero() const;
  double max_abs() const;
  std::size_t rank() const;
  /// Throws Error(kDependentSpan) when singular.
  RationalMatrix inverse() const;
  Eigen::MatrixXd to_eigen() const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// a*b - b*a
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace ftatlas
