#ifndef LIEMULT_LIE_ALGEBRA_HPP
#define LIEMULT_LIE_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liemult/matrix.hpp"
#include "liemult/subspace.hpp"

namespace liemult {

/// Bracket table input: (i, j) with i < j mapped to the expansion of [e_i, e_j].
using BracketTable = std::map<std::pair<std::size_t, std::size_t>, QVec>;

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// labeled basis. Only pairs i < j are stored; antisymmetry is synthesized and
/// the Jacobi identity is validated at construction.
class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}  // the zero algebra

  static LieAlgebra make(std::size_t dim, const BracketTable& table,
                         std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structure row for i < j; nullptr when the bracket is zero.
  const SparseVec* row(std::size_t i, std::size_t j) const;

  /// [u, v] for arbitrary coordinate vectors.
  QVec bracket(const QVec& u, const QVec& v) const;
  SparseVec bracket_sparse(const SparseVec& u, const SparseVec& v) const;

  /// Nonzero table keys (i < j), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> nonzero_pairs() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  LieAlgebra(std::size_t dim, std::vector<std::string> labels)
      : dim_(dim), labels_(std::move(labels)) {}
  void validate_jacobi() const;

  std::size_t dim_;
  std::vector<std::string> labels_;
  std::unordered_map<std::uint64_t, SparseVec> table_;  // key = i * dim + j, i < j
};

/// Lie algebra homomorphism; bracket preservation is validated on all basis
/// pairs at construction.
class LieHom {
 public:
  LieHom(LieAlgebra source, LieAlgebra target, MatrixQ matrix);

  const LieAlgebra& source() const { return source_; }
  const LieAlgebra& target() const { return target_; }
  const MatrixQ& matrix() const { return matrix_; }

  QVec apply(const QVec& v) const { return matrix_.apply(v); }
  bool is_surjective() const;
  bool is_bijective() const;
  Subspace kernel() const { return kernel_basis(matrix_); }

 private:
  LieAlgebra source_, target_;
  MatrixQ matrix_;
};

// -- structural operations ---------------------------------------------------

LieAlgebra make_algebra(std::size_t dim, const BracketTable& table,
                        std::vector<std::string> labels = {});

QVec bracket(const LieAlgebra& L, const QVec& u, const QVec& v);

/// Span of [x, y] for x in a, y in b.
Subspace product_subspace(const LieAlgebra& L, const Subspace& a, const Subspace& b);

Subspace derived_subalgebra(const LieAlgebra& L);

/// L^1 = L, L^{k+1} = [L^k, L], listed until the first repeat (zero for
/// nilpotent algebras).
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

bool is_nilpotent(const LieAlgebra& L);

/// Number of terms before the series hits zero; throws NotNilpotent otherwise.
std::size_t nilpotency_class(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);

std::size_t minimal_generator_count(const LieAlgebra& L);

bool is_ideal(const LieAlgebra& L, const Subspace& k);

/// L/k with the induced bracket on the unit-vector complement of k, together
/// with the projection.
std::pair<LieAlgebra, LieHom> quotient_algebra(const LieAlgebra& L, const Subspace& k);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// The algebra structure induced on a bracket-closed subspace, with basis the
/// subspace's echelon basis, plus the inclusion into L.
std::pair<LieAlgebra, LieHom> subalgebra_on(const LieAlgebra& L, const Subspace& s);

/// Splits a class-two algebra as H + abelian(t) with Z(H) = H^2; returns H and t.
std::pair<LieAlgebra, std::size_t> decompose_class2(const LieAlgebra& L);

}  // namespace liemult

#endif
