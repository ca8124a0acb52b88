#ifndef LIEMULT_HALL_HPP
#define LIEMULT_HALL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "liemult/lie_algebra.hpp"

namespace liemult {

/// μ(1) = 1; μ(k) = 0 when k has a squared prime factor; otherwise (-1)^s for
/// s distinct prime factors.
int mobius(std::uint64_t m);

/// Number of basic commutators of length n on d generators:
/// (1/n) Σ_{m|n} μ(m) d^{n/m}.
std::uint64_t witt(std::uint64_t d, std::uint64_t n);

/// Basic commutator stored as a node of a flat, rank-ordered basis: leaves are
/// generators, nodes point at earlier entries. The index of a tree in its
/// basis is its order rank.
struct HallTree {
  std::size_t length = 1;
  int generator = -1;   // 0-based generator for leaves, -1 for nodes
  std::size_t left = 0, right = 0;  // ranks of the children (nodes only)
  bool is_leaf() const { return generator >= 0; }
};

using HallBasis = std::vector<HallTree>;

/// All basic commutators of length <= max_len on d generators, in order:
/// shorter lengths first, same length sorted by (left rank, right rank).
HallBasis hall_basis(std::size_t d, std::size_t max_len);

/// Nested-bracket rendering, e.g. "[[x2,x1],x1]".
std::string render_hall_tree(const HallBasis& basis, std::size_t rank);

/// Expands brackets of basis elements in the Hall basis, truncating products
/// of combined length beyond `max_class` to zero.
class HallRewriter {
 public:
  HallRewriter(const HallBasis& basis, std::size_t max_class);

  /// [u, v] as a combination of basis ranks (sorted sparse vector).
  SparseVec expand(std::size_t u, std::size_t v);

 private:
  SparseVec expand_oriented(std::size_t u, std::size_t v);

  const HallBasis& basis_;
  std::size_t max_class_;
  std::unordered_map<std::uint64_t, std::size_t> node_rank_;  // (left,right) -> rank
  std::unordered_map<std::uint64_t, SparseVec> memo_;
  std::size_t depth_ = 0;
};

/// Convenience single-shot form of the rewriter over hall_basis(d, c).
SparseVec hall_rewrite(std::size_t d, std::size_t c, std::size_t u_rank, std::size_t v_rank);

/// Free nilpotent Lie algebra on d generators of class c, with the Hall trees
/// of length <= c as basis.
struct FreeNilpotent {
  std::size_t d = 0;
  std::size_t c = 0;
  HallBasis trees;
  LieAlgebra algebra;
  std::vector<std::size_t> generator_indices;
};

FreeNilpotent free_nilpotent(std::size_t d, std::size_t c);

}  // namespace liemult

#endif
