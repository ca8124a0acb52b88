#include "liemult/matrix.hpp"

#include <algorithm>

#include "liemult/errors.hpp"

namespace liemult {

QVec to_dense(const SparseVec& v, std::size_t dim) {
  QVec out(dim);
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

SparseVec to_sparse(const QVec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

void sparse_axpy(SparseVec& a, const Rational& c, const SparseVec& b) {
  if (c.is_zero() || b.empty()) return;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rational s = a[i].second + c * b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

void sparse_scale(SparseVec& a, const Rational& c) {
  if (c.is_zero()) {
    a.clear();
    return;
  }
  for (auto& [i, x] : a) x *= c;
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw DimensionMismatch("matrix entries do not fill rows x cols");
}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QVec MatrixQ::row(std::size_t r) const {
  QVec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

QVec MatrixQ::apply(const QVec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix apply: size mismatch");
  QVec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = at(r, c);
      if (!a.is_zero()) out[r] += a * x[c];
    }
  }
  return out;
}

MatrixQ MatrixQ::multiply(const MatrixQ& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix multiply: size mismatch");
  MatrixQ out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Rational& b = other.at(k, c);
        if (!b.is_zero()) out.at(r, c) += a * b;
      }
    }
  return out;
}

std::pair<MatrixQ, std::vector<std::size_t>> rref(const MatrixQ& m) {
  MatrixQ a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // First nonzero entry in column order; no pivoting heuristics needed.
    std::size_t sel = row;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = col; c < a.cols(); ++c) std::swap(a.at(row, c), a.at(sel, c));
    Rational inv = Rational(1) / a.at(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      Rational f = a.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a.at(row, c).is_zero()) a.at(r, c) -= f * a.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const MatrixQ& m) { return rref(m).second.size(); }

}  // namespace liemult
