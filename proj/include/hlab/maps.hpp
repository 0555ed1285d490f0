#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hlab/combinatorics.hpp"
#include "hlab/matrix.hpp"
#include "hlab/space.hpp"

namespace hlab {

enum class Mode { Wedge, Divided };

inline std::string to_string(Mode m) { return m == Mode::Wedge ? "wedge" : "divided"; }
inline Mode parse_mode(const std::string& s) {
  if (s == "wedge") return Mode::Wedge;
  if (s == "divided") return Mode::Divided;
  throw InvalidParameter("mode must be wedge or divided, got '" + s + "'");
}

namespace detail {

// Calls fn(seq) for every distinct ordering of the weakly decreasing multiset `ms`.
template <class Fn>
void for_each_arrangement(const std::vector<int>& ms, Fn&& fn) {
  std::map<int, int> count;
  for (int v : ms) ++count[v];
  std::vector<int> seq;
  seq.reserve(ms.size());
  auto rec = [&](auto&& self) -> void {
    if (seq.size() == ms.size()) {
      fn(seq);
      return;
    }
    for (auto& [v, c] : count) {
      if (c == 0) continue;
      --c;
      seq.push_back(v);
      self(self);
      seq.pop_back();
      ++c;
    }
  };
  rec(rec);
}

inline int exponent_of(const std::vector<int>& parts) {
  int j = 0;
  for (int v : parts) j += v;
  return j;
}

// Position of x^j in Sym^d U (or 1^{(d-j)}x^{(j)} in D^d U) is j.
inline std::vector<int> binary_form_parts(int d, int j) {
  std::vector<int> p(d, 0);
  for (int t = 0; t < j; ++t) p[t] = 1;
  return p;
}

}  // namespace detail

// Sym^a U (x) Sym^b U -> Sym^{a+b} U, x^i (x) x^j -> x^{i+j}.
inline ExactMatrix mult_map(int a, int b, Field f = Field::rationals()) {
  require(a >= 0 && b >= 0, "mult_map needs a, b >= 0");
  MatrixBuilder mb(f, a + b + 1, (a + 1) * (b + 1));
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) mb.add(i + j, i * (b + 1) + j, 1);
  return mb.build(SpaceExpr::tensor(SymU(a), SymU(b)), SymU(a + b));
}

// D^a U -> D^b U (x) D^c U, x^{(k)} -> sum_{k1+k2=k} x^{(k1)} (x) x^{(k2)}.
inline ExactMatrix comult_map(int a, int b, int c, Field f = Field::rationals()) {
  require(b >= 0 && c >= 0 && b + c == a, "comult_map needs b + c == a with b, c >= 0");
  MatrixBuilder mb(f, (b + 1) * (c + 1), a + 1);
  for (int k = 0; k <= a; ++k)
    for (int k1 = 0; k1 <= b; ++k1) {
      int k2 = k - k1;
      if (k2 >= 0 && k2 <= c) mb.add(k1 * (c + 1) + k2, k, 1);
    }
  return mb.build(DU(a), SpaceExpr::tensor(DU(b), DU(c)));
}

// D^d U (x) Sym^r U -> D^{d-r} U, <x^{(k)}, x^j> = x^{(k-j)}.
inline ExactMatrix contraction(int d, int r, Field f = Field::rationals()) {
  require(r >= 0 && d >= r, "contraction needs d >= r >= 0");
  MatrixBuilder mb(f, d - r + 1, (d + 1) * (r + 1));
  for (int k = 0; k <= d; ++k)
    for (int j = 0; j <= r; ++j)
      if (k - j >= 0 && k - j <= d - r) mb.add(k - j, k * (r + 1) + j, 1);
  return mb.build(SpaceExpr::tensor(DU(d), SymU(r)), DU(d - r));
}

// Multiplication in the polynomial ring Sym(X): Sym^a X (x) Sym^b X -> Sym^{a+b} X.
inline ExactMatrix sym_mult(const SpaceExpr& x, int a, int b, Field f = Field::rationals()) {
  SpaceExpr sa = SpaceExpr::sym(a, x), sb = SpaceExpr::sym(b, x), sc = SpaceExpr::sym(a + b, x);
  MatrixBuilder mb(f, sc.dim(), sa.dim() * sb.dim());
  const auto& ba = sa.basis();
  const auto& bb = sb.basis();
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (std::size_t j = 0; j < bb.size(); ++j) {
      std::vector<int> u = ba[i].parts;
      u.insert(u.end(), bb[j].parts.begin(), bb[j].parts.end());
      sort_weakly_decreasing(u);
      mb.add(sc.index_of(u), i * bb.size() + j, 1);
    }
  return mb.build(SpaceExpr::tensor(sa, sb), sc);
}

// The swap A (x) B -> B (x) A.
inline ExactMatrix tensor_swap(const SpaceExpr& a, const SpaceExpr& b, Field f = Field::rationals()) {
  std::size_t da = a.dim(), db = b.dim();
  MatrixBuilder mb(f, da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) mb.add(j * da + i, i * db + j, 1);
  return mb.build(SpaceExpr::tensor(a, b), SpaceExpr::tensor(b, a));
}

inline void require_labels(const ExactMatrix& f, const char* who) {
  if (!f.domain() || !f.codomain()) throw InvalidParameter(std::string(who) + " needs a labelled matrix");
}

// Wedge^m(f): f(e_{a1}) ^ ... ^ f(e_{am}).
inline ExactMatrix wedge_power_map(int m, const ExactMatrix& f) {
  require_labels(f, "wedge_power_map");
  SpaceExpr src = SpaceExpr::wedge(m, *f.domain()), dst = SpaceExpr::wedge(m, *f.codomain());
  MatrixBuilder mb(f.field(), dst.dim(), src.dim());
  const auto& sb = src.basis();
  std::vector<int> seq;
  for (std::size_t col = 0; col < sb.size(); ++col) {
    const auto& a = sb[col].parts;
    auto rec = [&](auto&& self, std::size_t j, const Scalar& coeff) -> void {
      if (j == a.size()) {
        std::vector<int> t = seq;
        int sign = sort_decreasing_with_sign(t);
        if (sign != 0) mb.add(dst.index_of(t), col, sign > 0 ? coeff : -coeff);
        return;
      }
      for (const auto& e : f.column(a[j])) {
        int ti = static_cast<int>(e.index);
        if (std::find(seq.begin(), seq.end(), ti) != seq.end()) continue;
        seq.push_back(ti);
        self(self, j + 1, coeff * e.value);
        seq.pop_back();
      }
    };
    rec(rec, 0, Scalar(f.field(), 1));
  }
  return mb.build(src, dst);
}

// D^m(f) on symmetric tensors, expressed in the orbit-sum basis: the coefficient of
// e_gamma is the coefficient of the sorted tensor gamma in the image.
inline ExactMatrix divided_power_map(int m, const ExactMatrix& f) {
  require_labels(f, "divided_power_map");
  SpaceExpr src = SpaceExpr::divided(m, *f.domain()), dst = SpaceExpr::divided(m, *f.codomain());
  MatrixBuilder mb(f.field(), dst.dim(), src.dim());
  const auto& sb = src.basis();
  for (std::size_t col = 0; col < sb.size(); ++col) {
    std::map<int, int> remaining;
    for (int v : sb[col].parts) ++remaining[v];
    std::vector<int> t;
    auto rec = [&](auto&& self, const Scalar& coeff) -> void {
      if (static_cast<int>(t.size()) == m) {
        mb.add(dst.index_of(t), col, coeff);
        return;
      }
      for (auto& [s, c] : remaining) {
        if (c == 0) continue;
        --c;
        for (const auto& e : f.column(s)) {
          int ti = static_cast<int>(e.index);
          if (!t.empty() && ti > t.back()) continue;
          t.push_back(ti);
          self(self, coeff * e.value);
          t.pop_back();
        }
        ++c;
      }
    };
    rec(rec, Scalar(f.field(), 1));
  }
  return mb.build(src, dst);
}

// Sym^m(f): e_{a1}...e_{am} -> f(e_{a1})...f(e_{am}).
inline ExactMatrix symmetric_power_map(int m, const ExactMatrix& f) {
  require_labels(f, "symmetric_power_map");
  SpaceExpr src = SpaceExpr::sym(m, *f.domain()), dst = SpaceExpr::sym(m, *f.codomain());
  MatrixBuilder mb(f.field(), dst.dim(), src.dim());
  const auto& sb = src.basis();
  std::vector<int> t;
  for (std::size_t col = 0; col < sb.size(); ++col) {
    const auto& a = sb[col].parts;
    auto rec = [&](auto&& self, std::size_t j, const Scalar& coeff) -> void {
      if (j == a.size()) {
        std::vector<int> s = t;
        sort_weakly_decreasing(s);
        mb.add(dst.index_of(s), col, coeff);
        return;
      }
      for (const auto& e : f.column(a[j])) {
        t.push_back(static_cast<int>(e.index));
        self(self, j + 1, coeff * e.value);
        t.pop_back();
      }
    };
    rec(rec, 0, Scalar(f.field(), 1));
  }
  return mb.build(src, dst);
}

// Canonical maps D^m A (x) Wedge^m B -> Wedge^m(A (x) B) and D^m A (x) D^m B -> D^m(A (x) B).
// Wedge mode: e_alpha (x) (b1^...^bm) -> sum over distinct orderings (a'_1..a'_m) of alpha
// of (a'_1 (x) b1) ^ ... ^ (a'_m (x) bm). Divided mode: e_alpha (x) e_beta -> sum of e_gamma
// over the distinct multisets gamma of pairs whose projections are alpha and beta.
inline ExactMatrix canonical_embed(int m, const SpaceExpr& a, const SpaceExpr& b, Mode mode,
                                   Field f = Field::rationals()) {
  require(m >= 0, "canonical_embed needs m >= 0");
  if (mode == Mode::Wedge) require(static_cast<std::uint64_t>(m) <= b.dim(), "canonical_embed: m exceeds dim B");
  SpaceExpr da = SpaceExpr::divided(m, a);
  SpaceExpr second = mode == Mode::Wedge ? SpaceExpr::wedge(m, b) : SpaceExpr::divided(m, b);
  SpaceExpr ab = SpaceExpr::tensor(a, b);
  SpaceExpr target = mode == Mode::Wedge ? SpaceExpr::wedge(m, ab) : SpaceExpr::divided(m, ab);
  const int dimb = static_cast<int>(b.dim());
  const auto& ba = da.basis();
  const auto& bs = second.basis();
  MatrixBuilder mb(f, target.dim(), ba.size() * bs.size());
  for (std::size_t i = 0; i < ba.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j) {
      std::size_t col = i * bs.size() + j;
      const auto& beta = bs[j].parts;
      std::set<std::vector<int>> seen;
      detail::for_each_arrangement(ba[i].parts, [&](const std::vector<int>& arr) {
        std::vector<int> seq(m);
        for (int t = 0; t < m; ++t) seq[t] = arr[t] * dimb + beta[t];
        if (mode == Mode::Wedge) {
          int sign = sort_decreasing_with_sign(seq);
          if (sign != 0) mb.add(target.index_of(seq), col, sign);
        } else {
          sort_weakly_decreasing(seq);
          if (seen.insert(seq).second) mb.add(target.index_of(seq), col, 1);
        }
      });
    }
  return mb.build(SpaceExpr::tensor(da, second), target);
}

}  // namespace hlab
