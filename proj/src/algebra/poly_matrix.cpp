#include "thicket/algebra/poly_matrix.hpp"

#include "thicket/errors.hpp"

namespace thicket {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  return diagonal(ring, n, Polynomial::constant(ring, Scalar(1)));
}

PolyMatrix PolyMatrix::diagonal(RingPtr ring, std::size_t n, const Polynomial& value) {
  PolyMatrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void PolyMatrix::set_column(std::size_t c, const std::vector<Polynomial>& values) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw PreconditionError("matrix dimension mismatch in addition");
  PolyMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix dimension mismatch in product");
  PolyMatrix m(a.ring_ ? a.ring_ : b.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Polynomial& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        m(i, j) += aik * bkj;
      }
    }
  return m;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

void PolyMatrix::place(std::size_t r0, std::size_t c0, const PolyMatrix& block) {
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
}

PolyMatrix PolyMatrix::column_range(std::size_t c0, std::size_t n) const {
  PolyMatrix m(ring_, rows_, n);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, c0 + j);
  return m;
}

PolyMatrix PolyMatrix::row_range(std::size_t r0, std::size_t n) const {
  PolyMatrix m(ring_, n, cols_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(r0 + i, j);
  return m;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_) throw PreconditionError("row mismatch in hconcat");
  PolyMatrix m(a.ring_ ? a.ring_ : b.ring_, a.rows_, a.cols_ + b.cols_);
  m.place(0, 0, a);
  m.place(0, a.cols_, b);
  return m;
}

std::string homogeneity_violation(const PolyMatrix& m, const FreeModuleSpec& row_degrees,
                                  const FreeModuleSpec& column_degrees, int offset) {
  if (row_degrees.rank() != m.rows() || column_degrees.rank() != m.cols())
    return "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
           " but degree lists have lengths " + std::to_string(row_degrees.rank()) + " and " +
           std::to_string(column_degrees.rank());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Polynomial& e = m(i, j);
      if (e.is_zero()) continue;
      int expected = column_degrees.degrees[j] - row_degrees.degrees[i] + offset;
      auto d = e.degree();
      if (!d)
        return "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " + e.to_string() +
               " is not homogeneous";
      if (*d != expected)
        return "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " + e.to_string() +
               " has degree " + std::to_string(*d) + ", expected " + std::to_string(expected);
    }
  return {};
}

}  // namespace thicket
