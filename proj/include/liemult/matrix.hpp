#ifndef LIEMULT_MATRIX_HPP
#define LIEMULT_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "liemult/rational.hpp"

namespace liemult {

/// Dense coordinate vector over Q.
using QVec = std::vector<Rational>;

/// Sorted list of (index, nonzero coefficient) pairs.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

QVec to_dense(const SparseVec& v, std::size_t dim);
SparseVec to_sparse(const QVec& v);

/// a += c * b, merging sorted supports.
void sparse_axpy(SparseVec& a, const Rational& c, const SparseVec& b);
void sparse_scale(SparseVec& a, const Rational& c);
bool is_zero(const QVec& v);

/// Dense row-major matrix of rationals.
class MatrixQ {
 public:
  MatrixQ() : rows_(0), cols_(0) {}
  MatrixQ(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  MatrixQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_rows(const std::vector<QVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  QVec row(std::size_t r) const;
  QVec apply(const QVec& x) const;  // matrix * column vector
  MatrixQ multiply(const MatrixQ& other) const;

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// Reduced row-echelon form together with the pivot columns. The row space is
/// preserved; trailing zero rows are kept so the shape matches the input.
std::pair<MatrixQ, std::vector<std::size_t>> rref(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

}  // namespace liemult

#endif
