#include "liemult/hall.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "liemult/errors.hpp"

namespace liemult {

int mobius(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("mobius requires a positive argument");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    ++factors;
  }
  if (m > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

std::uint64_t witt(std::uint64_t d, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("witt requires a positive length");
  mpz_class sum = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (n % m) continue;
    const int mu = mobius(m);
    if (mu == 0) continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), d, n / m);
    sum += mu * pw;
  }
  if (sum % n != 0) throw Error("witt sum not divisible by n");  // cannot happen
  sum /= static_cast<unsigned long>(n);
  if (sum < 0 || !sum.fits_ulong_p())
    throw InvalidArgument("witt value out of range for these arguments");
  return sum.get_ui();
}

namespace {
std::uint64_t pair_key(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}
}  // namespace

HallBasis hall_basis(std::size_t d, std::size_t max_len) {
  if (d == 0) throw InvalidArgument("hall basis needs at least one generator");
  HallBasis basis;
  std::vector<std::vector<std::size_t>> by_length(max_len + 1);
  for (std::size_t g = 0; g < d; ++g) {
    HallTree leaf;
    leaf.length = 1;
    leaf.generator = static_cast<int>(g);
    by_length[1].push_back(basis.size());
    basis.push_back(leaf);
  }
  for (std::size_t t = 2; t <= max_len; ++t) {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, HallTree>> level;
    for (std::size_t left_len = 1; left_len < t; ++left_len) {
      const std::size_t right_len = t - left_len;
      for (std::size_t u : by_length[left_len]) {
        for (std::size_t v : by_length[right_len]) {
          if (u <= v) continue;  // need left > right in the order
          if (!basis[u].is_leaf() && v < basis[u].right) continue;
          HallTree node;
          node.length = t;
          node.left = u;
          node.right = v;
          level.push_back({{u, v}, node});
        }
      }
    }
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, node] : level) {
      by_length[t].push_back(basis.size());
      basis.push_back(node);
    }
  }
  return basis;
}

std::string render_hall_tree(const HallBasis& basis, std::size_t rank) {
  const HallTree& t = basis[rank];
  if (t.is_leaf()) return "x" + std::to_string(t.generator + 1);
  return "[" + render_hall_tree(basis, t.left) + "," + render_hall_tree(basis, t.right) + "]";
}

HallRewriter::HallRewriter(const HallBasis& basis, std::size_t max_class)
    : basis_(basis), max_class_(max_class) {
  for (std::size_t r = 0; r < basis_.size(); ++r)
    if (!basis_[r].is_leaf()) node_rank_[pair_key(basis_[r].left, basis_[r].right)] = r;
}

SparseVec HallRewriter::expand(std::size_t u, std::size_t v) {
  if (u >= basis_.size() || v >= basis_.size())
    throw IndexOutOfRange("hall rewrite: rank out of range");
  if (u == v) return {};
  if (u < v) {
    SparseVec r = expand_oriented(v, u);
    sparse_scale(r, Rational(-1));
    return r;
  }
  return expand_oriented(u, v);
}

// Orientation u > v. Recursion is well-founded: the two inner calls drop the
// total length, and the two outer calls keep it while strictly raising the
// rank of the smaller argument.
SparseVec HallRewriter::expand_oriented(std::size_t u, std::size_t v) {
  if (basis_[u].length + basis_[v].length > max_class_) return {};
  const std::uint64_t key = pair_key(u, v);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (++depth_ > 1000000) throw Error("hall rewrite recursion bound exceeded");
  SparseVec out;
  if (basis_[u].is_leaf() || basis_[u].right <= v) {
    // Hall condition met: [u, v] is itself a basis element.
    auto node = node_rank_.find(key);
    if (node == node_rank_.end()) throw Error("hall basis lookup failed");
    out.emplace_back(node->second, Rational(1));
  } else {
    // u = [a, b] with v < b: [[a,b],v] = [[a,v],b] + [a,[b,v]].
    const std::size_t a = basis_[u].left, b = basis_[u].right;
    for (const auto& [t, c] : expand(a, v)) {
      SparseVec part = expand(t, b);
      sparse_axpy(out, c, part);
    }
    for (const auto& [s, c] : expand(b, v)) {
      SparseVec part = expand(a, s);
      sparse_axpy(out, c, part);
    }
  }
  --depth_;
  memo_[key] = out;
  return out;
}

SparseVec hall_rewrite(std::size_t d, std::size_t c, std::size_t u_rank, std::size_t v_rank) {
  HallBasis basis = hall_basis(d, c);
  HallRewriter rw(basis, c);
  return rw.expand(u_rank, v_rank);
}

FreeNilpotent free_nilpotent(std::size_t d, std::size_t c) {
  if (d == 0 || c == 0) throw InvalidArgument("free nilpotent algebra needs d >= 1, c >= 1");
  FreeNilpotent f;
  f.d = d;
  f.c = c;
  f.trees = hall_basis(d, c);
  HallRewriter rw(f.trees, c);
  const std::size_t n = f.trees.size();
  BracketTable table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (f.trees[i].length + f.trees[j].length > c) continue;
      SparseVec row = rw.expand(i, j);
      if (!row.empty()) table[{i, j}] = to_dense(row, n);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t r = 0; r < n; ++r) labels.push_back(render_hall_tree(f.trees, r));
  f.algebra = LieAlgebra::make(n, table, std::move(labels));
  for (std::size_t g = 0; g < d; ++g) f.generator_indices.push_back(g);
  return f;
}

}  // namespace liemult
