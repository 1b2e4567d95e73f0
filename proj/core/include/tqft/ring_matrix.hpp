#pragma once

#include <string>
#include <vector>

#include "tqft/fraction.hpp"

namespace tqft {

/// Dense matrix over Fraction with optional basis labels.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(const RingSpec& ring, size_t rows, size_t cols);

  static RingMatrix identity(const RingSpec& ring, size_t n);
  static RingMatrix diagonal(const std::vector<Fraction>& entries);

  const RingSpec& ring() const { return ring_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Fraction& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Fraction& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

  bool is_identity() const;
  bool is_diagonal() const;
  /// True when every row and column has exactly one nonzero entry.
  bool is_monomial() const;
  /// Scalar multiple of the identity.
  bool is_scalar_matrix() const;

  /// Division-free expansion over column subsets.
  Fraction determinant() const;
  /// Transpose of the cofactor matrix.
  RingMatrix adjugate() const;
  /// Throws RingError when singular or (generic mode) when the determinant is
  /// not a unit of the localized ring.
  RingMatrix inverse() const;

  RingMatrix substitute(const RingSpec& target) const;

 private:
  RingSpec ring_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Fraction> data_;
};

}  // namespace tqft
