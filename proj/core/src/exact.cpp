#include "ftatlas/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "ftatlas/error.hpp"

namespace ftatlas {

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::kParseError, "not a rational literal: '" + text + "'");
  };
  if (text.empty()) return fail();
  if (text.find('/') != std::string::npos) {
    Rational value;
    if (value.set_str(text, 10) != 0 || value.get_den() == 0) return fail();
    value.canonicalize();
    return value;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos++]);
    seen_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos++]);
      --exponent;
      seen_digit = true;
    }
  }
  if (!seen_digit) return fail();
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::size_t consumed = 0;
    long e = 0;
    try {
      e = std::stol(text.substr(pos), &consumed);
    } catch (const std::exception&) {
      return fail();
    }
    if (consumed == 0) return fail();
    pos += consumed;
    exponent += e;
  }
  if (pos != text.size() || std::labs(exponent) > 4096) return fail();
  mpz_class numerator(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational value = exponent >= 0 ? Rational(numerator * scale) : Rational(numerator, scale);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational value(num(rng), den(rng));
  value.canonicalize();
  return value;
}

// ---------------------------------------------------------------------------

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) v.entries_.emplace_back(i, dense[i]);
  }
  return v;
}

SparseVector SparseVector::unit(std::size_t index, Rational value) {
  SparseVector v;
  if (sgn(value) != 0) v.entries_.emplace_back(index, std::move(value));
  return v;
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (sgn(factor) == 0 || other.entries_.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational sum = a->second + factor * b->second;
      if (sgn(sum) != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (sgn(factor) == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

void SparseVector::push_back_unchecked(std::size_t index, Rational value) {
  if (sgn(value) != 0) entries_.emplace_back(index, std::move(value));
}

std::vector<Rational> SparseVector::to_dense(std::size_t size) const {
  std::vector<Rational> dense(size);
  for (const auto& [i, value] : entries_) {
    if (i < size) dense[i] = value;
  }
  return dense;
}

// ---------------------------------------------------------------------------

std::pair<SparseVector, SparseVector> EchelonBasis::reduce_tracked(const SparseVector& v) const {
  SparseVector residual = v;
  SparseVector combination;
  std::size_t cursor = 0;
  for (;;) {
    const auto& entries = residual.entries();
    std::size_t row_index = rows_.size();
    Rational coefficient;
    for (const auto& [index, value] : entries) {
      if (index < cursor) continue;
      auto it = std::lower_bound(pivots_.begin(), pivots_.end(), index);
      if (it != pivots_.end() && *it == index) {
        row_index = static_cast<std::size_t>(it - pivots_.begin());
        coefficient = value;
        cursor = index + 1;
        break;
      }
    }
    if (row_index == rows_.size()) break;
    // Stored rows are normalized to a leading 1.
    const Rational factor = -coefficient;
    residual.axpy(factor, rows_[row_index].vector);
    combination.axpy(factor, rows_[row_index].combination);
  }
  return {std::move(residual), std::move(combination)};
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
  return reduce_tracked(v).first;
}

bool EchelonBasis::insert(const SparseVector& v) {
  auto [residual, combination] = reduce_tracked(v);
  if (residual.is_zero()) return false;
  const std::size_t id = accepted_.size();
  accepted_.push_back(v);
  combination.axpy(1, SparseVector::unit(id));
  const Rational inv_lead = 1 / Rational(residual.entries().front().second);
  residual.scale(inv_lead);
  combination.scale(inv_lead);
  const std::size_t pivot = residual.leading_index();
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = it - pivots_.begin();
  pivots_.insert(it, pivot);
  rows_.insert(rows_.begin() + offset, Row{std::move(residual), std::move(combination)});
  return true;
}

std::optional<std::vector<Rational>> EchelonBasis::coordinates(const SparseVector& v) const {
  auto [residual, combination] = reduce_tracked(v);
  if (!residual.is_zero()) return std::nullopt;
  combination.scale(-1);
  return combination.to_dense(accepted_.size());
}

// ---------------------------------------------------------------------------

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

double RationalMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::fabs(x.get_d()));
  return m;
}

namespace {

// Row-reduces `m` in place (optionally mirroring operations on `mirror`)
// and returns the rank.
std::size_t eliminate(RationalMatrix& m, RationalMatrix* mirror) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
      if (mirror)
        for (std::size_t c = 0; c < mirror->cols(); ++c) std::swap((*mirror)(pivot, c), (*mirror)(rank, c));
    }
    const Rational inv = 1 / Rational(m(rank, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m(rank, c) *= inv;
    if (mirror)
      for (std::size_t c = 0; c < mirror->cols(); ++c) (*mirror)(rank, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (sgn(m(rank, c)) != 0) m(r, c) -= factor * m(rank, c);
      }
      if (mirror)
        for (std::size_t c = 0; c < mirror->cols(); ++c) {
          if (sgn((*mirror)(rank, c)) != 0) (*mirror)(r, c) -= factor * (*mirror)(rank, c);
        }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return eliminate(copy, nullptr);
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::kSizeMismatch, "inverse of a non-square matrix");
  RationalMatrix copy = *this;
  RationalMatrix inv = identity(rows_);
  if (eliminate(copy, &inv) != rows_) throw Error(ErrorCode::kDependentSpan, "matrix is singular");
  return inv;
}

Eigen::MatrixXd RationalMatrix::to_eigen() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).get_d();
  return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::kSizeMismatch, "matrix sum");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::kSizeMismatch, "matrix difference");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kSizeMismatch, "matrix product");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

}  // namespace ftatlas
