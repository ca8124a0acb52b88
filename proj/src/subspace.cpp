#include "liemult/subspace.hpp"

#include <algorithm>

#include "liemult/errors.hpp"

namespace liemult {

bool EchelonBuilder::insert(SparseVec row) {
  for (auto& [i, c] : row)
    if (i >= ambient_) throw IndexOutOfRange("row index exceeds ambient dimension");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  // Normalize the leading coefficient, then clear that column everywhere.
  const std::size_t pivot = row.front().first;
  Rational inv = Rational(1) / row.front().second;
  sparse_scale(row, inv);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), pivot,
                               [](const auto& p, std::size_t col) { return p.first < col; });
    if (it != rows_[r].end() && it->first == pivot) {
      Rational f = -it->second;
      sparse_axpy(rows_[r], f, row);
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
  return true;
}

bool EchelonBuilder::insert(const QVec& row) { return insert(to_sparse(row)); }

SparseVec EchelonBuilder::reduce(SparseVec v) const {
  std::size_t from = 0;
  while (!v.empty()) {
    const std::size_t lead = v.front().first;
    auto it = std::lower_bound(pivots_.begin() + static_cast<std::ptrdiff_t>(from),
                               pivots_.end(), lead);
    if (it == pivots_.end() || *it != lead) break;
    const std::size_t r = static_cast<std::size_t>(it - pivots_.begin());
    Rational f = -v.front().second;
    sparse_axpy(v, f, rows_[r]);
    from = r + 1;
  }
  return v;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<QVec>& spanning)
    : ambient_(ambient_dim) {
  EchelonBuilder b(ambient_dim);
  for (const auto& v : spanning) {
    if (v.size() != ambient_dim) throw DimensionMismatch("spanning vector length mismatch");
    b.insert(v);
  }
  for (const auto& row : b.rows()) basis_.push_back(to_dense(row, ambient_dim));
}

Subspace::Subspace(EchelonBuilder&& builder) : ambient_(builder.ambient_dim()) {
  for (const auto& row : builder.rows()) basis_.push_back(to_dense(row, ambient_));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    QVec e(ambient_dim);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
  }
  return s;
}

Subspace Subspace::span_of(std::size_t ambient_dim, const QVec& v) {
  return Subspace(ambient_dim, std::vector<QVec>{v});
}

bool Subspace::contains(const QVec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("membership test in wrong ambient space");
  EchelonBuilder b(ambient_);
  for (const auto& row : basis_) b.insert(row);
  return b.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("containment in wrong ambient space");
  EchelonBuilder b(ambient_);
  for (const auto& row : basis_) b.insert(row);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const QVec& v) { return b.contains(v); });
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace sum: ambient dimensions differ");
  EchelonBuilder builder(a.ambient_dim());
  for (const auto& v : a.basis()) builder.insert(v);
  for (const auto& v : b.basis()) builder.insert(v);
  return Subspace(std::move(builder));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace intersection: ambient dimensions differ");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  // Kernel of the stacked system [A^T | -B^T]: solutions pair up coefficient
  // vectors for the two bases describing one common element.
  const std::size_t da = a.dim(), db = b.dim();
  MatrixQ m(n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t r = 0; r < n; ++r) m.at(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t r = 0; r < n; ++r) m.at(r, da + j) = -b.basis()[j][r];
  Subspace solutions = kernel_basis(m);
  EchelonBuilder builder(n);
  for (const auto& sol : solutions.basis()) {
    QVec v(n);
    for (std::size_t i = 0; i < da; ++i) {
      if (sol[i].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (!a.basis()[i][r].is_zero()) v[r] += sol[i] * a.basis()[i][r];
      }
    }
    builder.insert(v);
  }
  return Subspace(std::move(builder));
}

Subspace kernel_basis(const MatrixQ& m) {
  auto [r, pivots] = rref(m);
  EchelonBuilder builder(m.cols());
  std::size_t p = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (p < pivots.size() && pivots[p] == col) {
      ++p;
      continue;
    }
    // Free column: unit there, minus the pivot-column entries of its column.
    SparseVec v;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!r.at(i, col).is_zero()) v.emplace_back(pivots[i], -r.at(i, col));
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    v.insert(it, {col, Rational(1)});
    builder.insert(std::move(v));
  }
  return Subspace(std::move(builder));
}

std::vector<std::size_t> complement_columns(std::size_t ambient_dim, const Subspace& w) {
  if (w.ambient_dim() != ambient_dim)
    throw DimensionMismatch("quotient map: ambient dimensions differ");
  std::vector<std::size_t> pivots;
  for (const auto& row : w.basis()) {
    std::size_t c = 0;
    while (c < ambient_dim && row[c].is_zero()) ++c;
    pivots.push_back(c);
  }
  std::vector<std::size_t> free_cols;
  std::size_t p = 0;
  for (std::size_t col = 0; col < ambient_dim; ++col) {
    if (p < pivots.size() && pivots[p] == col) {
      ++p;
      continue;
    }
    free_cols.push_back(col);
  }
  return free_cols;
}

MatrixQ quotient_map(std::size_t ambient_dim, const Subspace& w) {
  const auto free_cols = complement_columns(ambient_dim, w);
  MatrixQ q(free_cols.size(), ambient_dim);
  for (std::size_t r = 0; r < free_cols.size(); ++r) {
    const std::size_t f = free_cols[r];
    q.at(r, f) = 1;
    for (std::size_t i = 0; i < w.dim(); ++i) {
      const QVec& row = w.basis()[i];
      std::size_t pivot = 0;
      while (row[pivot].is_zero()) ++pivot;
      if (!row[f].is_zero()) q.at(r, pivot) = -row[f];
    }
  }
  return q;
}

std::vector<QVec> extend_basis(const Subspace& smaller, const Subspace& larger) {
  if (smaller.ambient_dim() != larger.ambient_dim())
    throw DimensionMismatch("extend_basis: ambient dimensions differ");
  EchelonBuilder b(smaller.ambient_dim());
  for (const auto& v : smaller.basis()) b.insert(v);
  std::vector<QVec> added;
  for (const auto& v : larger.basis())
    if (b.insert(v)) added.push_back(v);
  return added;
}

}  // namespace liemult
