#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "hlab/matrix.hpp"

namespace hlab {

namespace detail {

// Connected components of the bipartite row/column incidence graph. Every matrix is
// block diagonal after permuting rows and columns by component, so rank, row reduction
// and inversion can be done block by block.
struct Block {
  std::vector<std::size_t> rows;  // increasing
  std::vector<std::size_t> cols;  // increasing
};

inline std::vector<Block> components(const ExactMatrix& m) {
  std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> parent(R + C);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t j = 0; j < C; ++j)
    for (const auto& e : m.column(j)) {
      std::size_t a = find(e.index), b = find(R + j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<long> slot(R + C, -1);
  std::vector<Block> blocks;
  for (std::size_t j = 0; j < C; ++j) {
    if (m.column(j).empty()) continue;
    std::size_t r = find(R + j);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[r]].cols.push_back(j);
  }
  for (std::size_t i = 0; i < R; ++i) {
    std::size_t r = find(i);
    if (slot[r] >= 0) blocks[slot[r]].rows.push_back(i);
  }
  return blocks;
}

// Dense copy of a block (rows x cols, row-major).
inline std::vector<std::vector<Scalar>> dense_block(const ExactMatrix& m, const Block& b) {
  std::vector<std::size_t> row_pos(m.rows(), 0);
  for (std::size_t t = 0; t < b.rows.size(); ++t) row_pos[b.rows[t]] = t;
  std::vector<std::vector<Scalar>> d(b.rows.size(), std::vector<Scalar>(b.cols.size(), Scalar(m.field(), 0)));
  for (std::size_t t = 0; t < b.cols.size(); ++t)
    for (const auto& e : m.column(b.cols[t])) d[row_pos[e.index]][t] = e.value;
  return d;
}

inline std::size_t rank_block_modp(const ExactMatrix& m, const Block& b) {
  const std::uint64_t p = m.field().characteristic();
  std::vector<std::size_t> row_pos(m.rows(), 0);
  for (std::size_t t = 0; t < b.rows.size(); ++t) row_pos[b.rows[t]] = t;
  std::size_t nr = b.rows.size(), nc = b.cols.size();
  std::vector<std::uint64_t> a(nr * nc, 0);
  for (std::size_t t = 0; t < nc; ++t)
    for (const auto& e : m.column(b.cols[t])) a[row_pos[e.index] * nc + t] = e.value.residue();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t piv = rank;
    while (piv < nr && a[piv * nc + c] == 0) ++piv;
    if (piv == nr) continue;
    if (piv != rank)
      for (std::size_t t = c; t < nc; ++t) std::swap(a[piv * nc + t], a[rank * nc + t]);
    std::uint64_t inv = mod_inv(a[rank * nc + c], p);
    for (std::size_t t = c; t < nc; ++t) a[rank * nc + t] = a[rank * nc + t] * inv % p;
    for (std::size_t r = rank + 1; r < nr; ++r) {
      std::uint64_t f = a[r * nc + c];
      if (f == 0) continue;
      std::uint64_t nf = p - f;
      for (std::size_t t = c; t < nc; ++t) a[r * nc + t] = (a[r * nc + t] + nf * a[rank * nc + t]) % p;
    }
    ++rank;
  }
  return rank;
}

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;  // sorted by column

inline void make_primitive(IntRow& r) {
  mpz_class g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Fraction-free sparse elimination over Z with content removal after every row update.
// Rows are cleared of denominators first; the rank over Q is unchanged.
inline std::size_t rank_block_rational(const ExactMatrix& m, const Block& b) {
  std::vector<std::size_t> row_pos(m.rows(), 0);
  for (std::size_t t = 0; t < b.rows.size(); ++t) row_pos[b.rows[t]] = t;
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> qrows(b.rows.size());
  for (std::size_t t = 0; t < b.cols.size(); ++t)
    for (const auto& e : m.column(b.cols[t])) qrows[row_pos[e.index]].emplace_back(t, e.value.rational());
  std::vector<IntRow> rows;
  rows.reserve(qrows.size());
  for (auto& q : qrows) {
    if (q.empty()) continue;
    mpz_class l = 1;
    for (const auto& [c, v] : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntRow r;
    r.reserve(q.size());
    for (const auto& [c, v] : q) r.emplace_back(c, mpz_class(v.get_num() * (l / v.get_den())));
    make_primitive(r);
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  std::vector<bool> alive(rows.size(), true);
  std::size_t remaining = rows.size();
  IntRow scratch;
  while (remaining > 0) {
    // Pivot row: fewest nonzeros; pivot entry: smallest magnitude. Ties by position.
    std::size_t pr = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (alive[r] && (pr == rows.size() || rows[r].size() < rows[pr].size())) pr = r;
    const IntRow& prow = rows[pr];
    std::size_t pe = 0;
    for (std::size_t t = 1; t < prow.size(); ++t)
      if (mpz_cmpabs(prow[t].second.get_mpz_t(), prow[pe].second.get_mpz_t()) < 0) pe = t;
    const std::size_t pc = prow[pe].first;
    const mpz_class pv = prow[pe].second;
    alive[pr] = false;
    --remaining;
    ++rank;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      IntRow& row = rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), pc, [](const auto& e, std::size_t c) { return e.first < c; });
      if (it == row.end() || it->first != pc) continue;
      mpz_class g = gcd(pv, it->second);
      mpz_class fa = pv / g, fb = it->second / g;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < prow.size()) {
        if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
          scratch.emplace_back(row[i].first, fa * row[i].second);
          ++i;
        } else if (i == row.size() || prow[j].first < row[i].first) {
          scratch.emplace_back(prow[j].first, -fb * prow[j].second);
          ++j;
        } else {
          mpz_class v = fa * row[i].second - fb * prow[j].second;
          if (sgn(v) != 0) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
      if (row.empty()) {
        alive[r] = false;
        --remaining;
      } else {
        make_primitive(row);
      }
    }
  }
  return rank;
}

// Reduced row echelon form of a dense block, in place; returns pivot columns.
inline std::vector<std::size_t> rref_dense(std::vector<std::vector<Scalar>>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t nr = a.size(), nc = a[0].size(), rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t piv = rank;
    while (piv < nr && a[piv][c].is_zero()) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[rank]);
    Scalar inv = a[rank][c].inverse();
    for (std::size_t t = c; t < nc; ++t)
      if (!a[rank][t].is_zero()) a[rank][t] *= inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      Scalar f = a[r][c];
      for (std::size_t t = c; t < nc; ++t)
        if (!a[rank][t].is_zero()) a[r][t] -= f * a[rank][t];
    }
    pivots.push_back(c);
    ++rank;
  }
  a.resize(rank);
  return pivots;
}

}  // namespace detail

// Rank over the matrix's field. Independent of pivoting by construction.
inline std::size_t rank(const ExactMatrix& m) {
  std::size_t r = 0;
  for (const auto& b : detail::components(m))
    r += m.field().is_rational() ? detail::rank_block_rational(m, b) : detail::rank_block_modp(m, b);
  return r;
}

// The unique reduced row echelon form: nonzero rows ordered by pivot column, each
// pivot entry equal to one.
struct RowEchelon {
  std::vector<std::size_t> pivots;
  std::vector<SparseVector> rows;  // rows[t] has its leading one at pivots[t]
};

inline RowEchelon rref(const ExactMatrix& m) {
  std::vector<std::pair<std::size_t, SparseVector>> found;
  for (const auto& b : detail::components(m)) {
    auto d = detail::dense_block(m, b);
    auto piv = detail::rref_dense(d);
    for (std::size_t t = 0; t < piv.size(); ++t) {
      SparseVector row;
      for (std::size_t c = 0; c < b.cols.size(); ++c)
        if (!d[t][c].is_zero()) row.push_back({b.cols[c], d[t][c]});
      found.emplace_back(b.cols[piv[t]], std::move(row));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  RowEchelon out;
  for (auto& [p, r] : found) {
    out.pivots.push_back(p);
    out.rows.push_back(std::move(r));
  }
  return out;
}

// Basis of the right kernel, one vector per non-pivot column in increasing order,
// each scaled so its first nonzero coordinate is one.
inline std::vector<SparseVector> kernel_basis(const ExactMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<long> pivot_row(m.cols(), -1);
  for (std::size_t t = 0; t < e.pivots.size(); ++t) pivot_row[e.pivots[t]] = static_cast<long>(t);
  // For each free column f, collect -R[t][f] for the pivot rows t that touch f.
  std::vector<SparseVector> touching(m.cols());
  for (std::size_t t = 0; t < e.rows.size(); ++t)
    for (const auto& en : e.rows[t])
      if (pivot_row[en.index] < 0) touching[en.index].push_back({e.pivots[t], -en.value});
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot_row[f] >= 0) continue;
    SparseVector v = touching[f];
    v.push_back({f, Scalar(m.field(), 1)});
    v = ExactMatrix::canonical(std::move(v), m.cols());
    Scalar lead = v.front().value.inverse();
    for (auto& en : v) en.value *= lead;
    basis.push_back(std::move(v));
  }
  return basis;
}

inline ExactMatrix kernel_matrix(const ExactMatrix& m) {
  auto basis = kernel_basis(m);
  ExactMatrix k(m.field(), m.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) k.set_column(j, basis[j]);
  return k;
}

// Inverse of a square matrix; throws std::domain_error if singular.
inline ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  ExactMatrix inv(m.field(), m.cols(), m.rows());
  std::vector<SparseVector> cols(m.rows());
  std::size_t covered = 0;
  for (const auto& b : detail::components(m)) {
    if (b.rows.size() != b.cols.size()) throw std::domain_error("matrix is singular");
    std::size_t n = b.rows.size();
    auto d = detail::dense_block(m, b);
    for (std::size_t r = 0; r < n; ++r) {
      d[r].resize(2 * n, Scalar(m.field(), 0));
      d[r][n + r] = Scalar(m.field(), 1);
    }
    auto piv = detail::rref_dense(d);
    if (piv.size() != n || (n > 0 && piv.back() != n - 1)) throw std::domain_error("matrix is singular");
    // Row t of the reduced block is row b.cols[t] of the inverse; column n+s maps to b.rows[s].
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t s = 0; s < n; ++s)
        if (!d[t][n + s].is_zero()) cols[b.rows[s]].push_back({b.cols[t], d[t][n + s]});
    covered += n;
  }
  if (covered != m.rows()) throw std::domain_error("matrix is singular");
  for (std::size_t j = 0; j < cols.size(); ++j) inv.set_column(j, std::move(cols[j]));
  if (m.domain() && m.codomain()) return inv.with_labels(*m.codomain(), *m.domain());
  return inv;
}

// |det m| over Q (block decomposition fixes the determinant only up to sign).
inline mpq_class abs_determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (!m.field().is_rational()) throw InvalidParameter("abs_determinant is defined over Q only");
  mpq_class det = 1;
  std::size_t covered = 0;
  for (const auto& b : detail::components(m)) {
    if (b.rows.size() != b.cols.size()) return 0;
    auto a = detail::dense_block(m, b);
    std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a[piv][c].is_zero()) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[c]);
      det *= a[c][c].rational();
      Scalar inv = a[c][c].inverse();
      for (std::size_t r = c + 1; r < n; ++r) {
        if (a[r][c].is_zero()) continue;
        Scalar f = a[r][c] * inv;
        for (std::size_t t = c; t < n; ++t)
          if (!a[c][t].is_zero()) a[r][t] -= f * a[c][t];
      }
    }
    covered += n;
  }
  if (covered != m.rows()) return 0;
  return abs(det);
}

inline bool is_invertible(const ExactMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

// Applies m to a sparse vector.
inline SparseVector apply(const ExactMatrix& m, const SparseVector& v) {
  SparseVector out;
  for (const auto& e : v)
    for (const auto& f : m.column(e.index)) out.push_back({f.index, f.value * e.value});
  return ExactMatrix::canonical(std::move(out), m.rows());
}

}  // namespace hlab
