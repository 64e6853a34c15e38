#pragma once

#include <cstddef>
#include <vector>

#include "thicket/algebra/polynomial.hpp"

namespace thicket {

/// Degrees of the basis elements of a graded free module.
struct FreeModuleSpec {
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  friend bool operator==(const FreeModuleSpec&, const FreeModuleSpec&) = default;
};

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(RingPtr ring, std::size_t n);
  static PolyMatrix diagonal(RingPtr ring, std::size_t n, const Polynomial& value);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  std::vector<Polynomial> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Polynomial>& values);

  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const PolyMatrix& block);
  /// Columns [c0, c0 + n) as a new matrix.
  PolyMatrix column_range(std::size_t c0, std::size_t n) const;
  PolyMatrix row_range(std::size_t r0, std::size_t n) const;
  /// Horizontal concatenation [a | b].
  static PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

/// Checks that entry (i, j) is zero or homogeneous of degree
/// column_degree[j] - row_degree[i] + offset. On failure returns a message
/// naming the entry; returns an empty string when the matrix is homogeneous.
std::string homogeneity_violation(const PolyMatrix& m, const FreeModuleSpec& row_degrees,
                                  const FreeModuleSpec& column_degrees, int offset = 0);

}  // namespace thicket
