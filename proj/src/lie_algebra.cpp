#include "liemult/lie_algebra.hpp"

#include <algorithm>
#include <unordered_set>

#include "liemult/errors.hpp"

namespace liemult {

namespace {
std::uint64_t key_of(std::size_t i, std::size_t j, std::size_t dim) {
  return static_cast<std::uint64_t>(i) * dim + j;
}
}  // namespace

LieAlgebra LieAlgebra::make(std::size_t dim, const BracketTable& table,
                            std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  if (labels.size() != dim) throw DimensionMismatch("label count differs from dimension");
  LieAlgebra L(dim, std::move(labels));
  for (const auto& [key, value] : table) {
    const auto [i, j] = key;
    if (i >= dim || j >= dim) throw IndexOutOfRange("bracket table index out of range");
    if (i >= j) throw IndexOutOfRange("bracket table keys must satisfy i < j");
    if (value.size() != dim) throw DimensionMismatch("bracket table row length mismatch");
    SparseVec row = to_sparse(value);
    if (!row.empty()) L.table_[key_of(i, j, dim)] = std::move(row);
  }
  L.validate_jacobi();
  return L;
}

const SparseVec* LieAlgebra::row(std::size_t i, std::size_t j) const {
  auto it = table_.find(key_of(i, j, dim_));
  return it == table_.end() ? nullptr : &it->second;
}

SparseVec LieAlgebra::bracket_sparse(const SparseVec& u, const SparseVec& v) const {
  SparseVec acc;
  for (const auto& [i, a] : u) {
    for (const auto& [j, b] : v) {
      if (i == j) continue;
      const SparseVec* r = i < j ? row(i, j) : row(j, i);
      if (!r) continue;
      Rational c = a * b;
      if (i > j) c = -c;
      sparse_axpy(acc, c, *r);
    }
  }
  return acc;
}

QVec LieAlgebra::bracket(const QVec& u, const QVec& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    throw DimensionMismatch("bracket arguments have wrong length");
  return to_dense(bracket_sparse(to_sparse(u), to_sparse(v)), dim_);
}

std::vector<std::pair<std::size_t, std::size_t>> LieAlgebra::nonzero_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  keys.reserve(table_.size());
  for (const auto& [key, row] : table_)
    keys.emplace_back(static_cast<std::size_t>(key / dim_), static_cast<std::size_t>(key % dim_));
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim_ != b.dim_ || a.labels_ != b.labels_) return false;
  if (a.table_.size() != b.table_.size()) return false;
  for (const auto& [key, row] : a.table_) {
    auto it = b.table_.find(key);
    if (it == b.table_.end() || it->second != row) return false;
  }
  return true;
}

void LieAlgebra::validate_jacobi() const {
  // Only triples touching a nonzero structure row can break Jacobi; everything
  // else is identically zero.
  const auto pairs = nonzero_pairs();
  std::unordered_set<std::uint64_t> seen;
  auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
    // [[e_a, e_b], e_c] as a sparse vector.
    SparseVec out;
    if (a == b) return out;
    const SparseVec* r = a < b ? row(a, b) : row(b, a);
    if (!r) return out;
    const bool flip = a > b;
    for (const auto& [l, coeff] : *r) {
      if (l == c) continue;
      const SparseVec* s = l < c ? row(l, c) : row(c, l);
      if (!s) continue;
      Rational f = coeff;
      if (flip) f = -f;
      if (l > c) f = -f;
      sparse_axpy(out, f, *s);
    }
    return out;
  };
  for (const auto& [i, j] : pairs) {
    for (std::size_t k = 0; k < dim_; ++k) {
      if (k == i || k == j) continue;
      std::size_t t[3] = {i, j, k};
      std::sort(t, t + 3);
      const std::uint64_t id = (static_cast<std::uint64_t>(t[0]) * dim_ + t[1]) * dim_ + t[2];
      if (!seen.insert(id).second) continue;
      SparseVec sum = term(t[0], t[1], t[2]);
      sparse_axpy(sum, Rational(1), term(t[1], t[2], t[0]));
      sparse_axpy(sum, Rational(1), term(t[2], t[0], t[1]));
      if (!sum.empty()) throw JacobiViolation(t[0], t[1], t[2]);
    }
  }
}

LieHom::LieHom(LieAlgebra source, LieAlgebra target, MatrixQ matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw DimensionMismatch("hom matrix must be (target dim) x (source dim)");
  const std::size_t n = source_.dim();
  std::vector<QVec> image_cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    image_cols[i].resize(target_.dim());
    for (std::size_t r = 0; r < target_.dim(); ++r) image_cols[i][r] = matrix_.at(r, i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const SparseVec* r = source_.row(i, j);
      QVec lhs(target_.dim());
      if (r) {
        for (const auto& [l, c] : *r)
          for (std::size_t t = 0; t < target_.dim(); ++t)
            if (!matrix_.at(t, l).is_zero()) lhs[t] += c * matrix_.at(t, l);
      }
      QVec rhs = target_.bracket(image_cols[i], image_cols[j]);
      if (lhs != rhs)
        throw InvalidArgument("map does not preserve brackets on basis pair (" +
                              std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    }
  }
}

bool LieHom::is_surjective() const { return rank(matrix_) == target_.dim(); }

bool LieHom::is_bijective() const {
  return matrix_.rows() == matrix_.cols() && rank(matrix_) == matrix_.rows();
}

LieAlgebra make_algebra(std::size_t dim, const BracketTable& table,
                        std::vector<std::string> labels) {
  return LieAlgebra::make(dim, table, std::move(labels));
}

QVec bracket(const LieAlgebra& L, const QVec& u, const QVec& v) { return L.bracket(u, v); }

Subspace product_subspace(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != L.dim() || b.ambient_dim() != L.dim())
    throw DimensionMismatch("product_subspace: ambient dimension differs from algebra");
  EchelonBuilder builder(L.dim());
  std::vector<SparseVec> sa, sb;
  for (const auto& v : a.basis()) sa.push_back(to_sparse(v));
  for (const auto& v : b.basis()) sb.push_back(to_sparse(v));
  for (const auto& x : sa)
    for (const auto& y : sb) builder.insert(L.bracket_sparse(x, y));
  return Subspace(std::move(builder));
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  const Subspace full = Subspace::full(L.dim());
  return product_subspace(L, full, full);
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  std::vector<Subspace> series;
  series.push_back(Subspace::full(L.dim()));
  const Subspace full = Subspace::full(L.dim());
  while (!series.back().is_zero()) {
    Subspace next = product_subspace(L, series.back(), full);
    if (next == series.back()) break;  // stabilized above zero: not nilpotent
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const LieAlgebra& L) {
  return lower_central_series(L).back().is_zero();
}

std::size_t nilpotency_class(const LieAlgebra& L) {
  auto series = lower_central_series(L);
  if (!series.back().is_zero()) throw NotNilpotent("algebra is not nilpotent");
  return series.size() - 1;
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // x is central iff ad(x) kills every basis vector. Stack one linear
  // condition per coordinate of each [x, e_j]; only coordinates touched by a
  // nonzero structure row give a nonzero condition.
  std::map<std::pair<std::size_t, std::size_t>, QVec> cond;  // (j, l) -> row over x-coords
  for (const auto& [i, j] : L.nonzero_pairs()) {
    for (const auto& [l, c] : *L.row(i, j)) {
      auto& r1 = cond[{j, l}];
      if (r1.empty()) r1.resize(n);
      r1[i] += c;
      auto& r2 = cond[{i, l}];
      if (r2.empty()) r2.resize(n);
      r2[j] -= c;
    }
  }
  std::vector<QVec> rows;
  rows.reserve(cond.size());
  for (auto& [key, r] : cond) rows.push_back(std::move(r));
  return kernel_basis(MatrixQ::from_rows(rows, n));
}

std::size_t minimal_generator_count(const LieAlgebra& L) {
  if (!is_nilpotent(L)) throw NotNilpotent("generator count requires a nilpotent algebra");
  return L.dim() - derived_subalgebra(L).dim();
}

bool is_ideal(const LieAlgebra& L, const Subspace& k) {
  return k.contains(product_subspace(L, Subspace::full(L.dim()), k));
}

std::pair<LieAlgebra, LieHom> quotient_algebra(const LieAlgebra& L, const Subspace& k) {
  if (k.ambient_dim() != L.dim())
    throw DimensionMismatch("quotient_algebra: ambient dimension differs from algebra");
  if (!is_ideal(L, k)) throw NotAnIdeal("kernel subspace is not an ideal");
  const MatrixQ q = quotient_map(L.dim(), k);
  const auto cols = complement_columns(L.dim(), k);
  const std::size_t m = cols.size();
  BracketTable table;
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < m; ++r) labels.push_back(L.labels()[cols[r]]);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t ci = cols[i], cj = cols[j];
      const SparseVec* r = L.row(ci, cj);
      if (!r) continue;
      QVec img = q.apply(to_dense(*r, L.dim()));
      if (!is_zero(img)) table[{i, j}] = std::move(img);
    }
  }
  LieAlgebra quo = LieAlgebra::make(m, table, std::move(labels));
  LieHom proj(L, quo, q);
  return {std::move(quo), std::move(proj)};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  BracketTable table;
  for (const auto& [i, j] : a.nonzero_pairs()) {
    QVec v(n);
    for (const auto& [l, c] : *a.row(i, j)) v[l] = c;
    table[{i, j}] = std::move(v);
  }
  for (const auto& [i, j] : b.nonzero_pairs()) {
    QVec v(n);
    for (const auto& [l, c] : *b.row(i, j)) v[a.dim() + l] = c;
    table[{a.dim() + i, a.dim() + j}] = std::move(v);
  }
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return LieAlgebra::make(n, table, std::move(labels));
}

std::pair<LieAlgebra, LieHom> subalgebra_on(const LieAlgebra& L, const Subspace& s) {
  const std::size_t m = s.dim();
  // Coordinates w.r.t. the echelon basis, read off at the pivot columns.
  std::vector<std::size_t> pivots;
  for (const auto& row : s.basis()) {
    std::size_t c = 0;
    while (row[c].is_zero()) ++c;
    pivots.push_back(c);
  }
  auto coords = [&](const QVec& v) {
    QVec out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = v[pivots[i]];
    return out;
  };
  BracketTable table;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      QVec w = L.bracket(s.basis()[i], s.basis()[j]);
      if (!s.contains(w)) throw InvalidArgument("subspace is not closed under the bracket");
      QVec c = coords(w);
      if (!is_zero(c)) table[{i, j}] = std::move(c);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("s" + std::to_string(i + 1));
  LieAlgebra sub = LieAlgebra::make(m, table, std::move(labels));
  MatrixQ incl(L.dim(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < L.dim(); ++r) incl.at(r, i) = s.basis()[i][r];
  LieHom inclusion(sub, L, incl);
  return {std::move(sub), std::move(inclusion)};
}

std::pair<LieAlgebra, std::size_t> decompose_class2(const LieAlgebra& L) {
  std::size_t cls;
  try {
    cls = nilpotency_class(L);
  } catch (const NotNilpotent&) {
    throw NotClassTwo("decomposition requires nilpotency class exactly 2");
  }
  if (cls != 2) throw NotClassTwo("decomposition requires nilpotency class exactly 2");
  const Subspace derived = derived_subalgebra(L);
  const Subspace z = center(L);
  // Complement C of L^2 inside Z(L), then a complement of C containing L^2.
  const std::vector<QVec> c_vectors = extend_basis(derived, z);
  const std::size_t t = c_vectors.size();
  EchelonBuilder h_builder(L.dim());
  for (const auto& v : derived.basis()) h_builder.insert(v);
  EchelonBuilder combined(L.dim());
  for (const auto& v : derived.basis()) combined.insert(v);
  for (const auto& v : c_vectors) combined.insert(v);
  for (std::size_t i = 0; i < L.dim() && combined.rank() < L.dim(); ++i) {
    QVec e(L.dim());
    e[i] = 1;
    if (combined.insert(e)) h_builder.insert(e);
  }
  Subspace h_space(std::move(h_builder));
  auto [h, incl] = subalgebra_on(L, h_space);
  const Subspace h_center = center(h);
  const Subspace h_derived = derived_subalgebra(h);
  if (h_center != h_derived)
    throw NotClassTwo("split component fails Z(H) = H^2");
  if (h.dim() + t != L.dim()) throw NotClassTwo("split dimensions do not add up");
  return {std::move(h), t};
}

}  // namespace liemult
