#ifndef LIEMULT_SUBSPACE_HPP
#define LIEMULT_SUBSPACE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "liemult/matrix.hpp"

namespace liemult {

/// Incremental reduced-row-echelon accumulator. Rows are kept sparse and fully
/// reduced at all times, sorted by pivot column.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  /// Reduces the row against the current basis and absorbs what is left.
  /// Returns true when the row enlarged the span.
  bool insert(SparseVec row);
  bool insert(const QVec& row);

  /// Reduces a copy of v without inserting; empty result means membership.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  bool contains(const QVec& v) const { return contains(to_sparse(v)); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t ambient_;
  std::vector<SparseVec> rows_;     // sorted by pivot column
  std::vector<std::size_t> pivots_;  // pivots_[i] = leading column of rows_[i]
};

/// Subspace of Q^n held as a reduced-row-echelon basis, so equal subspaces
/// compare equal structurally.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  Subspace(std::size_t ambient_dim, const std::vector<QVec>& spanning);
  explicit Subspace(EchelonBuilder&& builder);

  static Subspace full(std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace span_of(std::size_t ambient_dim, const QVec& v);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVec>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_;
  std::vector<QVec> basis_;  // RREF rows, no zero rows
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Solutions of m x = 0 as a canonical subspace of Q^cols.
Subspace kernel_basis(const MatrixQ& m);

/// Surjective map Q^ambient -> Q^(ambient - dim w) whose kernel is exactly w.
/// Rows correspond to the free columns of w's echelon basis, so composing with
/// the section that re-inserts those coordinates is the identity.
MatrixQ quotient_map(std::size_t ambient_dim, const Subspace& w);

/// Columns of the quotient map's canonical section: the unit vectors of the
/// free columns, listed in increasing column order.
std::vector<std::size_t> complement_columns(std::size_t ambient_dim, const Subspace& w);

/// Basis vectors of `larger` that extend `smaller` to a spanning set of
/// `larger` (greedy echelon extension, deterministic).
std::vector<QVec> extend_basis(const Subspace& smaller, const Subspace& larger);

}  // namespace liemult

#endif
