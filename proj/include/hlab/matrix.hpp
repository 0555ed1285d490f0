#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hlab/errors.hpp"
#include "hlab/scalar.hpp"
#include "hlab/space.hpp"

namespace hlab {

struct Entry {
  std::size_t index;
  Scalar value;
};
using SparseVector = std::vector<Entry>;  // sorted by index, no zeros

// Sparse matrix stored by columns. Columns are the images of domain basis vectors.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), columns_(cols) {}

  static ExactMatrix identity(Field f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Scalar(f, 1)});
    return m;
  }
  static ExactMatrix identity(Field f, const SpaceExpr& s) {
    return identity(f, static_cast<std::size_t>(s.dim())).with_labels(s, s);
  }
  // Dense row-major integer data, mainly for tests.
  static ExactMatrix from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    ExactMatrix m(f, r, c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < r; ++i) {
        Scalar v(f, rows.at(i).at(j));
        if (!v.is_zero()) m.columns_[j].push_back({i, v});
      }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  // Replaces column j; `v` may be unsorted and contain repeats or zeros.
  void set_column(std::size_t j, SparseVector v) {
    if (j >= cols_) throw DimensionMismatch("column index out of range");
    for (const auto& e : v) check_same_field(field_, e.value.field());
    columns_[j] = canonical(std::move(v), rows_);
  }

  Scalar at(std::size_t i, std::size_t j) const {
    const auto& c = columns_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, std::size_t k) { return e.index < k; });
    if (it != c.end() && it->index == i) return it->value;
    return Scalar(field_, 0);
  }

  const std::optional<SpaceExpr>& domain() const { return domain_; }
  const std::optional<SpaceExpr>& codomain() const { return codomain_; }
  ExactMatrix with_labels(const SpaceExpr& dom, const SpaceExpr& cod) const {
    if (dom.dim() != cols_ || cod.dim() != rows_)
      throw DimensionMismatch("labels " + dom.to_string() + " -> " + cod.to_string() + " do not fit a " +
                              std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    ExactMatrix m = *this;
    m.domain_ = dom;
    m.codomain_ = cod;
    return m;
  }
  ExactMatrix without_labels() const {
    ExactMatrix m = *this;
    m.domain_.reset();
    m.codomain_.reset();
    return m;
  }

  // Row-major sorted list of nonzero entries.
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> triples() const {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& e : columns_[j]) t.emplace_back(e.index, j, e.value);
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    return t;
  }

  bool is_zero() const { return nonzeros() == 0; }

  // Entry-wise equality (labels are not compared).
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const auto& x = a.columns_[j];
      const auto& y = b.columns_[j];
      if (x.size() != y.size()) return false;
      for (std::size_t t = 0; t < x.size(); ++t)
        if (x[t].index != y[t].index || !(x[t].value == y[t].value)) return false;
    }
    return true;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (const auto& e : columns_[j]) t.columns_[e.index].push_back({j, e.value});
    if (domain_ && codomain_) return t.with_labels(*codomain_, *domain_);
    return t;
  }

  ExactMatrix scaled(const Scalar& c) const {
    ExactMatrix m = *this;
    for (auto& col : m.columns_) {
      for (auto& e : col) e.value *= c;
      col = canonical(std::move(col), rows_);
    }
    return m;
  }

  // Image of every entry in F_p; the matrix must be p-integral.
  ExactMatrix reduce(const Field& target) const {
    ExactMatrix m(target, rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      SparseVector v;
      for (const auto& e : columns_[j]) v.push_back({e.index, e.value.reduce(target)});
      m.columns_[j] = canonical(std::move(v), rows_);
    }
    m.domain_ = domain_;
    m.codomain_ = codomain_;
    return m;
  }

  bool p_integral(std::uint64_t p) const {
    for (const auto& col : columns_)
      for (const auto& e : col)
        if (e.value.field().is_rational() && reduce_mod(e.value.denominator(), p) == 0) return false;
    return true;
  }

  // Sorts by index, merges repeats, drops zeros.
  static SparseVector canonical(SparseVector v, std::size_t bound) {
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    SparseVector out;
    for (auto& e : v) {
      if (e.index >= bound) throw DimensionMismatch("row index out of range");
      if (!out.empty() && out.back().index == e.index)
        out.back().value += e.value;
      else
        out.push_back(std::move(e));
    }
    std::erase_if(out, [](const Entry& e) { return e.value.is_zero(); });
    return out;
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVector> columns_;
  std::optional<SpaceExpr> domain_, codomain_;
};

// Accumulates entries column by column; integer coefficients are lifted into the field.
class MatrixBuilder {
 public:
  MatrixBuilder(Field f, std::size_t rows, std::size_t cols) : m_(f, rows, cols), cur_(cols) {}
  void add(std::size_t row, std::size_t col, const Scalar& v) {
    if (col >= cur_.size()) throw DimensionMismatch("column index out of range");
    cur_[col].push_back({row, v});
  }
  void add(std::size_t row, std::size_t col, long long v) {
    if (v != 0) add(row, col, Scalar(m_.field(), v));
  }
  const Field& field() const { return m_.field(); }
  ExactMatrix build() {
    for (std::size_t j = 0; j < cur_.size(); ++j) m_.set_column(j, std::move(cur_[j]));
    cur_.clear();
    return std::move(m_);
  }
  ExactMatrix build(const SpaceExpr& dom, const SpaceExpr& cod) { return build().with_labels(dom, cod); }

 private:
  ExactMatrix m_;
  std::vector<SparseVector> cur_;
};

inline void check_compose_labels(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.domain() && b.codomain() && !a.domain()->isomorphic_label(*b.codomain()))
    throw DimensionMismatch("label mismatch in composition: " + a.domain()->to_string() + " vs " +
                            b.codomain()->to_string());
}

// A·B (apply B first).
inline ExactMatrix compose(const ExactMatrix& a, const ExactMatrix& b) {
  check_same_field(a.field(), b.field());
  if (a.cols() != b.rows())
    throw DimensionMismatch("compose: " + std::to_string(a.cols()) + " columns vs " + std::to_string(b.rows()) +
                            " rows");
  check_compose_labels(a, b);
  ExactMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::map<std::size_t, Scalar> acc;
    for (const auto& e : b.column(j))
      for (const auto& f : a.column(e.index)) {
        auto [it, fresh] = acc.try_emplace(f.index, f.value * e.value);
        if (!fresh) it->second += f.value * e.value;
      }
    SparseVector v;
    for (auto& [i, s] : acc)
      if (!s.is_zero()) v.push_back({i, s});
    out.set_column(j, std::move(v));
  }
  if (b.domain() && a.codomain()) return out.with_labels(*b.domain(), *a.codomain());
  return out;
}

// Kronecker product; basis of the tensor product ordered row-major (left factor major).
inline ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  check_same_field(a.field(), b.field());
  ExactMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja)
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      SparseVector v;
      for (const auto& ea : a.column(ja))
        for (const auto& eb : b.column(jb)) v.push_back({ea.index * b.rows() + eb.index, ea.value * eb.value});
      out.set_column(ja * b.cols() + jb, std::move(v));
    }
  if (a.domain() && a.codomain() && b.domain() && b.codomain())
    return out.with_labels(SpaceExpr::tensor(*a.domain(), *b.domain()), SpaceExpr::tensor(*a.codomain(), *b.codomain()));
  return out;
}

inline ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
  check_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("add: shape mismatch");
  ExactMatrix out(a.field(), a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SparseVector v = a.column(j);
    v.insert(v.end(), b.column(j).begin(), b.column(j).end());
    out.set_column(j, std::move(v));
  }
  if (a.domain() && a.codomain()) return out.with_labels(*a.domain(), *a.codomain());
  return out;
}

// Columns [first, first+count) of m.
inline ExactMatrix column_block(const ExactMatrix& m, std::size_t first, std::size_t count) {
  ExactMatrix out(m.field(), m.rows(), count);
  for (std::size_t j = 0; j < count; ++j) out.set_column(j, m.column(first + j));
  return out;
}

// Stacks matrices with a common row count side by side.
inline ExactMatrix hconcat(const std::vector<ExactMatrix>& parts) {
  if (parts.empty()) throw DimensionMismatch("hconcat of nothing");
  std::size_t cols = 0;
  for (const auto& p : parts) {
    check_same_field(parts[0].field(), p.field());
    if (p.rows() != parts[0].rows()) throw DimensionMismatch("hconcat: row mismatch");
    cols += p.cols();
  }
  ExactMatrix out(parts[0].field(), parts[0].rows(), cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t j = 0; j < p.cols(); ++j) out.set_column(off + j, p.column(j));
    off += p.cols();
  }
  return out;
}

// Stacks matrices with a common column count on top of each other.
inline ExactMatrix vconcat(const std::vector<ExactMatrix>& parts) {
  if (parts.empty()) throw DimensionMismatch("vconcat of nothing");
  std::size_t rows = 0;
  for (const auto& p : parts) {
    check_same_field(parts[0].field(), p.field());
    if (p.cols() != parts[0].cols()) throw DimensionMismatch("vconcat: column mismatch");
    rows += p.rows();
  }
  ExactMatrix out(parts[0].field(), rows, parts[0].cols());
  for (std::size_t j = 0; j < out.cols(); ++j) {
    SparseVector v;
    std::size_t off = 0;
    for (const auto& p : parts) {
      for (const auto& e : p.column(j)) v.push_back({off + e.index, e.value});
      off += p.rows();
    }
    out.set_column(j, std::move(v));
  }
  return out;
}

}  // namespace hlab
