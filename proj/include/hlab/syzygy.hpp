#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <string>
#include <vector>

#include "hlab/combinatorics.hpp"
#include "hlab/linalg.hpp"
#include "hlab/maps.hpp"
#include "hlab/report.hpp"
#include "hlab/space.hpp"

namespace hlab {

// One graded slice L2 -> L1 -> L0 of a three-term complex.
struct ComplexSlice {
  ExactMatrix d1;  // L2 -> L1
  ExactMatrix d2;  // L1 -> L0
  std::size_t dim_l2() const { return d1.cols(); }
  std::size_t dim_l1() const { return d2.cols(); }
  std::size_t dim_l0() const { return d2.rows(); }
  bool composite_zero() const { return dim_l2() == 0 || dim_l0() == 0 || compose(d2, d1).is_zero(); }
};

struct SliceHomology {
  std::size_t dim_l2 = 0, dim_l1 = 0, dim_l0 = 0;
  std::size_t rank_d1 = 0, rank_d2 = 0;
  bool composite_zero = true;
  std::size_t kernel_d2() const { return dim_l1 - rank_d2; }
  std::size_t homology() const { return dim_l1 - rank_d2 - rank_d1; }
};

inline SliceHomology slice_homology(const ComplexSlice& c) {
  SliceHomology h{c.dim_l2(), c.dim_l1(), c.dim_l0(), rank(c.d1), rank(c.d2), c.composite_zero()};
  if (h.rank_d1 > h.kernel_d2()) throw std::logic_error("slice is not a complex");
  return h;
}

namespace detail {

// Sym^e of X as a list of weakly decreasing index tuples; empty for e < 0.
inline std::size_t sym_dim(const SpaceExpr& x, int e) { return e < 0 ? 0 : SpaceExpr::sym(e, x).dim(); }

inline std::size_t insert_variable(const SpaceExpr& target, std::vector<int> mono, int var) {
  mono.push_back(var);
  sort_weakly_decreasing(mono);
  return target.index_of(mono);
}

// The SL_2-equivariant inclusion D^{2i} U -> D^{i+1} U (x) D^{i+1} U,
//   x^{(c)} -> sum_a (c + 1 - 2a) e_a (x) e_{c+1-a}.
// Built as comultiplication into D^i (x) D^i, insertion of 1 (x) x - x (x) 1 and divided
// multiplication on each factor, that composite is (i+1) times this map; the primitive form
// is used so the map stays injective in every odd characteristic.
inline std::vector<std::pair<int, long long>> weyman_inclusion_terms(int i, int c) {
  std::vector<std::pair<int, long long>> out;
  for (int a = std::max(0, c + 1 - (i + 1)); a <= std::min(i + 1, c + 1); ++a) {
    long long coeff = c + 1 - 2 * a;
    if (coeff != 0) out.push_back({a, coeff});
  }
  return out;
}

}  // namespace detail

// The literal composite D^{2i} U -> D^i (x) D^i -> D^{i+1} (x) D^{i+1}, with the invariant
// 1 (x) x - x (x) 1 inserted; an independent route to (i+1) times the inclusion.
inline ExactMatrix weyman_inclusion_via_comultiplication(int i, Field f = Field::rationals()) {
  require(i >= 0, "weyman inclusion needs i >= 0");
  ExactMatrix comult = comult_map(2 * i, i, i, f);
  // Divided multiplication D^i U (x) U -> D^{i+1} U: x^{(a)}.1 = (i+1-a) x^{(a)}, x^{(a)}.x = (a+1) x^{(a+1)}.
  MatrixBuilder times(f, i + 2, (i + 1) * 2);
  for (int a = 0; a <= i; ++a) {
    times.add(a, a * 2 + 0, i + 1 - a);
    times.add(a + 1, a * 2 + 1, a + 1);
  }
  ExactMatrix mul = times.build(SpaceExpr::tensor(DU(i), U()), DU(i + 1));
  // D^i (x) D^i -> (D^i (x) U) (x) (D^i (x) U): w' (x) w'' -> (w' (x) 1) (x) (w'' (x) x) - (w' (x) x) (x) (w'' (x) 1).
  std::size_t di = static_cast<std::size_t>(i + 1);
  MatrixBuilder ins(f, (di * 2) * (di * 2), di * di);
  for (std::size_t p = 0; p < di; ++p)
    for (std::size_t q = 0; q < di; ++q) {
      std::size_t col = p * di + q;
      ins.add((p * 2 + 0) * (di * 2) + (q * 2 + 1), col, 1);
      ins.add((p * 2 + 1) * (di * 2) + (q * 2 + 0), col, -1);
    }
  ExactMatrix insert = ins.build();
  return compose(kronecker(mul, mul).without_labels(), compose(insert, comult.without_labels()));
}

inline ExactMatrix weyman_inclusion(int i, Field f = Field::rationals()) {
  require(i >= 0, "weyman inclusion needs i >= 0");
  std::size_t di = static_cast<std::size_t>(i + 2);
  MatrixBuilder mb(f, di * di, static_cast<std::size_t>(2 * i + 1));
  for (int c = 0; c <= 2 * i; ++c)
    for (auto [a, coeff] : detail::weyman_inclusion_terms(i, c))
      mb.add(static_cast<std::size_t>(a) * di + static_cast<std::size_t>(c + 1 - a), c, coeff);
  return mb.build();
}

// D^{2i} U (x) S~_{d-2} -> D^{i+1} U (x) S~_{d-1} -> S~_d with S~ = Sym(D^{i+1} U).
inline ComplexSlice weyman_complex(int i, int d, Field f = Field::rationals()) {
  require(i >= 0, "weyman_complex needs i >= 0");
  require(d >= 0, "weyman_complex needs d >= 0");
  const SpaceExpr x = DU(i + 1);
  const std::size_t nx = x.dim();
  const std::size_t n2 = detail::sym_dim(x, d - 2), n1 = detail::sym_dim(x, d - 1), n0 = detail::sym_dim(x, d);
  MatrixBuilder b1(f, nx * n1, static_cast<std::size_t>(2 * i + 1) * n2);
  if (n2 > 0) {
    SpaceExpr s2 = SpaceExpr::sym(d - 2, x), s1 = SpaceExpr::sym(d - 1, x);
    for (int c = 0; c <= 2 * i; ++c)
      for (std::size_t s = 0; s < n2; ++s)
        for (auto [a, coeff] : detail::weyman_inclusion_terms(i, c))
          b1.add(static_cast<std::size_t>(a) * n1 + detail::insert_variable(s1, s2.basis()[s].parts, c + 1 - a),
                 static_cast<std::size_t>(c) * n2 + s, coeff);
  }
  MatrixBuilder b2(f, n0, nx * n1);
  if (n1 > 0) {
    SpaceExpr s1 = SpaceExpr::sym(d - 1, x), s0 = SpaceExpr::sym(d, x);
    for (std::size_t a = 0; a < nx; ++a)
      for (std::size_t s = 0; s < n1; ++s)
        b2.add(detail::insert_variable(s0, s1.basis()[s].parts, static_cast<int>(a)), a * n1 + s, 1);
  }
  return {b1.build(), b2.build()};
}

inline std::size_t weyman_dim(int i, int d, Field f = Field::rationals()) {
  return slice_homology(weyman_complex(i, d, f)).homology();
}

// Closed-form dimensions of the Tor groups for the tangential variety and for scrolls,
// i = 0..g-2.
struct TorProfile {
  int g = 0;
  int a = -1;  // scroll parameter, -1 when absent
  std::vector<std::int64_t> tangential_source, tangential_target;
  std::vector<std::int64_t> scroll_source, scroll_target;
};

inline std::int64_t tangential_source_dim(int g, int i) { return (2LL * i + 1) * binom(g - 1, i + 1); }
// Wedge^i(Sym^{g-1} U) (x) Sym^{g-2-i} U.
inline std::int64_t tangential_target_dim(int g, int i) { return binom(g, i) * (g - 1 - i); }
inline std::int64_t scroll_source_dim(int g, int i) { return static_cast<std::int64_t>(i) * binom(g - 1, i + 1); }
inline std::int64_t scroll_target_dim(int g, int i) { return static_cast<std::int64_t>(g - 2 - i) * binom(g - 1, i); }

inline TorProfile tor_profiles(int g, int a = -1) {
  require(g >= 3, "tor_profiles needs g >= 3");
  if (a != -1) require(a >= 1 && 2 * a <= g - 1, "scroll parameter needs 1 <= a <= (g-1)/2");
  TorProfile p{g, a, {}, {}, {}, {}};
  for (int i = 0; i <= g - 2; ++i) {
    p.tangential_source.push_back(tangential_source_dim(g, i));
    p.tangential_target.push_back(tangential_target_dim(g, i));
    if (a != -1) {
      p.scroll_source.push_back(scroll_source_dim(g, i));
      p.scroll_target.push_back(scroll_target_dim(g, i));
    }
  }
  return p;
}

struct GreenRow {
  int i = 0, d = 0;
  std::int64_t source_dim = 0, target_dim = 0;
  SliceHomology slice;
  bool dims_match = false;  // L2 == source and ker d2 == target
  bool surjective = false;  // W^{(i+1)}_d == 0
  bool pass() const { return dims_match && surjective && slice.composite_zero; }
};

struct GreenReport {
  int g = 0;
  Field field;
  std::vector<GreenRow> rows;
  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass()) return false;
    return true;
  }
};

// For each i <= (g-1)/2 the Tor map is surjective iff W^{(i+1)} vanishes in degree d = g - i:
// its middle layer D^{i+1} U (x) S~_{g-1-i} is D^{i+1} U (x) Wedge^{i+1}(Sym^{g-1} U) under
// Hermite reciprocity.
inline GreenReport green_check(int g, Field f = Field::rationals()) {
  require(g >= 3, "green_check needs g >= 3");
  GreenReport rep{g, f, {}};
  for (int i = 0; i <= (g - 1) / 2; ++i) {
    GreenRow row{i, g - i, tangential_source_dim(g, i), tangential_target_dim(g, i), {}, false, false};
    row.slice = slice_homology(weyman_complex(i, row.d, f));
    row.dims_match = static_cast<std::int64_t>(row.slice.dim_l2) == row.source_dim &&
                     static_cast<std::int64_t>(row.slice.kernel_d2()) == row.target_dim;
    row.surjective = row.slice.homology() == 0;
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------------------
// Bigraded version over S~ = Sym(X (+) Y), X = D^{u+1} U, Y = D^{v+1} U. The bidegree (d1, d2)
// is that of the last layer S~_{(d1,d2)}.

enum class QPolicy { Transparent, Full };

inline std::string to_string(QPolicy q) { return q == QPolicy::Transparent ? "transparent" : "full"; }
inline QPolicy parse_policy(const std::string& s) {
  if (s == "transparent") return QPolicy::Transparent;
  if (s == "full") return QPolicy::Full;
  throw InvalidParameter("q_policy must be transparent or full, got '" + s + "'");
}

namespace detail {

struct Bigraded {
  SpaceExpr x, y;
  mutable std::map<std::pair<int, int>, SpaceExpr> cache;
  const SpaceExpr& sym(int which, int e) const {
    auto key = std::make_pair(which, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, SpaceExpr::sym(e, which == 0 ? x : y)).first;
    return it->second;
  }
  std::size_t dim(int e1, int e2) const { return sym_dim(x, e1) * sym_dim(y, e2); }
  std::size_t index(int e1, int e2, const std::vector<int>& m1, const std::vector<int>& m2) const {
    return sym(0, e1).index_of(m1) * sym(1, e2).dim() + sym(1, e2).index_of(m2);
  }
};

// D^{u+v} U -> D^u (x) D^v -> D^{u+1} (x) D^{v+1} with 1 (x) x - x (x) 1 inserted.
inline std::vector<std::vector<std::tuple<int, int, long long>>> lower_q_terms(int u, int v) {
  std::vector<std::vector<std::tuple<int, int, long long>>> out(u + v + 1);
  for (int c = 0; c <= u + v; ++c)
    for (int p = std::max(0, c - v); p <= std::min(u, c); ++p) {
      int q = c - p;
      // (x^{(p)} . 1) (x) (x^{(q)} . x) - (x^{(p)} . x) (x) (x^{(q)} . 1)
      out[c].push_back({p, q + 1, static_cast<long long>(u + 1 - p) * (q + 1)});
      out[c].push_back({p + 1, q, -static_cast<long long>(p + 1) * (v + 1 - q)});
    }
  return out;
}

}  // namespace detail

inline ComplexSlice bigraded_weyman_complex(int u, int v, int d1, int d2, QPolicy policy, Field f = Field::rationals()) {
  require(u >= 0 && v >= 0, "bigraded_weyman needs u, v >= 0");
  require(d1 >= 0 && d2 >= 0, "bidegree must be nonnegative");
  detail::Bigraded s{DU(u + 1), DU(v + 1), {}};
  const std::size_t nx = u + 2, ny = v + 2;
  const std::size_t a_dim = s.dim(d1 - 1, d2), b_dim = s.dim(d1, d2 - 1), src_dim = s.dim(d1 - 1, d2 - 1);
  const std::size_t top = static_cast<std::size_t>(u + v + 3), low = policy == QPolicy::Full ? u + v + 1 : 0;
  const std::size_t l1 = nx * a_dim + ny * b_dim;

  // Each generator of Q maps to sum of p' (x) p'' in X (x) Y; image (p' (x) y_{p''} s, -p'' (x) x_{p'} s).
  std::vector<std::vector<std::tuple<int, int, long long>>> gens;
  for (int c = 0; c <= u + v + 2; ++c) {
    std::vector<std::tuple<int, int, long long>> t;
    for (int p = std::max(0, c - (v + 1)); p <= std::min(u + 1, c); ++p) t.push_back({p, c - p, 1});
    gens.push_back(std::move(t));
  }
  if (policy == QPolicy::Full)
    for (auto& t : detail::lower_q_terms(u, v)) gens.push_back(std::move(t));

  MatrixBuilder b1(f, l1, (top + low) * src_dim);
  if (src_dim > 0) {
    SpaceExpr sx = SpaceExpr::sym(d1 - 1, s.x), sy = SpaceExpr::sym(d2 - 1, s.y);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t m1 = 0; m1 < sx.dim(); ++m1)
        for (std::size_t m2 = 0; m2 < sy.dim(); ++m2) {
          std::size_t col = g * src_dim + m1 * sy.dim() + m2;
          const auto& mx = sx.basis()[m1].parts;
          const auto& my = sy.basis()[m2].parts;
          for (auto [p, q, coeff] : gens[g]) {
            std::vector<int> ny_mono = my, nx_mono = mx;
            ny_mono.push_back(q);
            sort_weakly_decreasing(ny_mono);
            nx_mono.push_back(p);
            sort_weakly_decreasing(nx_mono);
            b1.add(static_cast<std::size_t>(p) * a_dim + s.index(d1 - 1, d2, mx, ny_mono), col, coeff);
            b1.add(nx * a_dim + static_cast<std::size_t>(q) * b_dim + s.index(d1, d2 - 1, nx_mono, my), col, -coeff);
          }
        }
  }
  MatrixBuilder b2(f, s.dim(d1, d2), l1);
  if (a_dim > 0) {
    SpaceExpr sx = SpaceExpr::sym(d1 - 1, s.x), sy = SpaceExpr::sym(d2, s.y);
    for (std::size_t p = 0; p < nx; ++p)
      for (std::size_t m1 = 0; m1 < sx.dim(); ++m1)
        for (std::size_t m2 = 0; m2 < sy.dim(); ++m2) {
          std::vector<int> mono = sx.basis()[m1].parts;
          mono.push_back(static_cast<int>(p));
          sort_weakly_decreasing(mono);
          b2.add(s.index(d1, d2, mono, sy.basis()[m2].parts), p * a_dim + m1 * sy.dim() + m2, 1);
        }
  }
  if (b_dim > 0) {
    SpaceExpr sx = SpaceExpr::sym(d1, s.x), sy = SpaceExpr::sym(d2 - 1, s.y);
    for (std::size_t q = 0; q < ny; ++q)
      for (std::size_t m1 = 0; m1 < sx.dim(); ++m1)
        for (std::size_t m2 = 0; m2 < sy.dim(); ++m2) {
          std::vector<int> mono = sy.basis()[m2].parts;
          mono.push_back(static_cast<int>(q));
          sort_weakly_decreasing(mono);
          b2.add(s.index(d1, d2, sx.basis()[m1].parts, mono), nx * a_dim + q * b_dim + m1 * sy.dim() + m2, 1);
        }
  }
  return {b1.build(), b2.build()};
}

inline std::size_t bigraded_weyman(int u, int v, int d1, int d2, QPolicy policy = QPolicy::Transparent,
                                   Field f = Field::rationals()) {
  return slice_homology(bigraded_weyman_complex(u, v, d1, d2, policy, f)).homology();
}

// Sym^{g-3-i} U (x) Wedge^u(Sym^{a-1} U) (x) Wedge^v(Sym^{g-2-a} U), i = u + v.
inline std::int64_t ribbon_target_dim(int g, int a, int u, int v) {
  return static_cast<std::int64_t>(g - 2 - u - v) * binom(a, u) * binom(g - 1 - a, v);
}

struct BigradedIdentification {
  int g = 0, a = 0, u = 0, v = 0;
  int d1 = 0, d2 = 0;
  std::int64_t expected = 0;
  std::size_t homology = 0;
  bool pass() const { return static_cast<std::int64_t>(homology) == expected; }
};

// Middle homology of the transparent complex at bidegree (a-u, g-1-a-v) against ribbon_target_dim.
inline BigradedIdentification bigraded_identification(int g, int a, int u, int v, Field f = Field::rationals()) {
  require(g >= 3 && a >= 1 && 2 * a <= g - 1, "need g >= 3 and 1 <= a <= (g-1)/2");
  require(u >= 0 && v >= 0 && u <= a && v <= g - 1 - a && u + v <= g - 2,
          "need 0 <= u <= a, 0 <= v <= g-1-a, u+v <= g-2");
  BigradedIdentification b{g, a, u, v, a - u, g - 1 - a - v, ribbon_target_dim(g, a, u, v), 0};
  b.homology = bigraded_weyman(u, v, b.d1, b.d2, QPolicy::Transparent, f);
  return b;
}

}  // namespace hlab
