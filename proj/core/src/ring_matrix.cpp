#include "tqft/ring_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace tqft {

RingMatrix::RingMatrix(const RingSpec& ring, size_t rows, size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Fraction::zero(ring)) {}

RingMatrix RingMatrix::identity(const RingSpec& ring, size_t n) {
  RingMatrix m(ring, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Fraction::one(ring);
  return m;
}

RingMatrix RingMatrix::diagonal(const std::vector<Fraction>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty diagonal");
  RingMatrix m(entries.front().ring(), entries.size(), entries.size());
  for (size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
  RingMatrix r(a.ring_, a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Fraction& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  r.row_labels = a.row_labels;
  r.col_labels = b.col_labels;
  return r;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  RingMatrix r = a;
  for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.ring_ == b.ring_)) return false;
  for (size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

bool RingMatrix::is_identity() const { return is_square() && *this == identity(ring_, rows_); }

bool RingMatrix::is_diagonal() const {
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool RingMatrix::is_monomial() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i) {
    size_t row_nz = 0, col_nz = 0;
    for (size_t j = 0; j < cols_; ++j) {
      row_nz += !(*this)(i, j).is_zero();
      col_nz += !(*this)(j, i).is_zero();
    }
    if (row_nz != 1 || col_nz != 1) return false;
  }
  return true;
}

bool RingMatrix::is_scalar_matrix() const {
  if (!is_square() || !is_diagonal()) return false;
  for (size_t i = 1; i < rows_; ++i)
    if ((*this)(i, i) != (*this)(0, 0)) return false;
  return true;
}

Fraction RingMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const size_t n = rows_;
  if (n == 0) return Fraction::one(ring_);
  if (n > 20) throw std::invalid_argument("determinant expansion limited to 20x20");
  // memo[mask] = det of rows (n - popcount(mask))..n-1 against columns in mask
  std::vector<Fraction> memo(size_t{1} << n);
  memo[0] = Fraction::one(ring_);
  for (size_t mask = 1; mask < memo.size(); ++mask) {
    const size_t row = n - static_cast<size_t>(std::popcount(mask));
    Fraction acc = Fraction::zero(ring_);
    int before = 0;
    for (size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      const Fraction& x = (*this)(row, c);
      if (!x.is_zero()) {
        const size_t sub = mask & ~(size_t{1} << c);
        if (!memo[sub].is_zero()) {
          Fraction term = x * memo[sub];
          if (before % 2) acc -= term;
          else acc += term;
        }
      }
      ++before;
    }
    memo[mask] = std::move(acc);
  }
  return memo.back();
}

RingMatrix RingMatrix::adjugate() const {
  if (!is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
  const size_t n = rows_;
  RingMatrix adj(ring_, n, n);
  if (n == 1) {
    adj(0, 0) = Fraction::one(ring_);
    return adj;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      RingMatrix minor(ring_, n - 1, n - 1);
      for (size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = (*this)(r, c);
        }
        ++rr;
      }
      Fraction cof = minor.determinant();
      adj(j, i) = (i + j) % 2 ? -cof : cof;
    }
  return adj;
}

RingMatrix RingMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const size_t n = rows_;
  RingMatrix result;
  if (ring_.is_root_of_unity()) {
    // Gauss-Jordan over the field.
    RingMatrix a = *this;
    RingMatrix inv = identity(ring_, n);
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && a(piv, col).is_zero()) ++piv;
      if (piv == n) throw RingError("singular matrix");
      if (piv != col)
        for (size_t j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      Fraction s = a(col, col).inverse();
      for (size_t j = 0; j < n; ++j) {
        a(col, j) *= s;
        inv(col, j) *= s;
      }
      for (size_t r = 0; r < n; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        Fraction f = a(r, col);
        for (size_t j = 0; j < n; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    result = std::move(inv);
  } else {
    Fraction det = determinant();
    if (det.is_zero()) throw RingError("singular matrix");
    Fraction s = det.inverse();
    result = adjugate();
    for (auto& x : result.data_) x *= s;
  }
  result.row_labels = col_labels;
  result.col_labels = row_labels;
  return result;
}

RingMatrix RingMatrix::substitute(const RingSpec& target) const {
  RingMatrix r(target, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].substitute(target);
  r.row_labels = row_labels;
  r.col_labels = col_labels;
  return r;
}

}  // namespace tqft
