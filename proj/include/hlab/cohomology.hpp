#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hlab/combinatorics.hpp"
#include "hlab/linalg.hpp"
#include "hlab/space.hpp"

namespace hlab {

// Nonzero cohomology of O(d) on P^k: h^0 in degree 0, h^k in degree k. On P^0, a point,
// every O(d) is trivial.
struct LineCohomology {
  std::int64_t h0 = 0, hk = 0;
};

inline LineCohomology line_cohomology(int k, int d) {
  require(k >= 0, "line_cohomology needs k >= 0");
  LineCohomology r;
  if (k == 0) return {1, 0};
  if (d >= 0) r.h0 = binom(d + k, k);
  if (k > 0 && d <= -k - 1) r.hk = binom(-d - 1, k);
  return r;
}

// j -> h^j, zero entries omitted.
using CohomologyVector = std::map<int, std::int64_t>;

// Kunneth on P^p x P^q for O(a, b).
inline CohomologyVector product_cohomology(int p, int q, int a, int b) {
  require(p >= 0 && q >= 0, "product_cohomology needs p, q >= 0");
  LineCohomology x = line_cohomology(p, a), y = line_cohomology(q, b);
  CohomologyVector out;
  auto put = [&](int j, std::int64_t v) {
    if (v != 0) out[j] += v;
  };
  put(0, x.h0 * y.h0);
  if (p > 0) put(p, x.hk * y.h0);
  if (q > 0) put(q, x.h0 * y.hk);
  if (p > 0 && q > 0) put(p + q, x.hk * y.hk);
  return out;
}

struct CohTable {
  int m = 0, d = 0, i = 0, t = 0;
  CohomologyVector h;
  bool is_zero() const { return h.empty(); }
  std::int64_t euler() const {
    std::int64_t e = 0;
    for (const auto& [j, v] : h) e += (j % 2 ? -v : v);
    return e;
  }
};

// Wedge^i E^m_d (t) on P^m is the pushforward of O(d + m - i + 1 + t, t) along
// P^i x P^{m-i} -> P^m, a finite map, so its cohomology is that of the line bundle.
inline CohTable wedge_E_cohomology(int m, int d, int i, int t) {
  require(m >= 1, "wedge_E_cohomology needs m >= 1");
  require(d >= 0, "wedge_E_cohomology needs d >= 0");
  require(i >= 0 && i <= m, "wedge_E_cohomology needs 0 <= i <= m");
  return {m, d, i, t, product_cohomology(i, m - i, d + m - i + 1 + t, t)};
}

// -1, ..., -(m-i), -(m-i+d+2), ..., -(m+d+1).
inline std::vector<int> root_sequence(int m, int d, int i) {
  require(m >= 1 && d >= 0 && i >= 0 && i <= m, "root_sequence needs m >= 1, d >= 0, 0 <= i <= m");
  std::vector<int> r;
  for (int j = 1; j <= m - i; ++j) r.push_back(-j);
  for (int j = m - i + d + 2; j <= m + d + 1; ++j) r.push_back(-j);
  return r;
}

struct SupernaturalReport {
  int m = 0, d = 0, i = 0;
  std::vector<int> roots;
  std::vector<CohTable> tables;  // t = -(m+d+2) .. 2
  std::vector<int> zero_twists;
  bool single_row = true;
  bool roots_match = true;
  bool pass() const { return single_row && roots_match; }
};

inline SupernaturalReport supernatural_check(int m, int d, int i) {
  SupernaturalReport r{m, d, i, root_sequence(m, d, i), {}, {}, true, true};
  for (int t = -(m + d + 2); t <= 2; ++t) {
    CohTable c = wedge_E_cohomology(m, d, i, t);
    if (c.h.size() > 1) r.single_row = false;
    if (c.is_zero()) r.zero_twists.push_back(t);
    r.tables.push_back(std::move(c));
  }
  std::vector<int> expect = r.roots;
  std::sort(expect.begin(), expect.end());
  r.roots_match = expect == r.zero_twists;
  return r;
}

// ---------------------------------------------------------------------------------------
// Sym^N E for E = E^k_{n-k} on P^k = P(D^k U), presented by
//   0 -> Sym^{n-k} U (-1) -> Sym^n U (x) O -> E -> 0,   x_a -> sum_j z_{a+j} (x) y_j.
// Its Koszul resolution has terms G_i = Wedge^i(Sym^{n-k} U) (x) S_{N-i} (x) O(-i) with
// S = Sym(Sym^n U) (variables z_0..z_n) and i <= min(N, n-k+1).

enum class TwistWindow { H0Row, HkRow, Transgression };

inline std::string to_string(TwistWindow w) {
  switch (w) {
    case TwistWindow::H0Row: return "H0-row";
    case TwistWindow::HkRow: return "Hk-row";
    case TwistWindow::Transgression: return "transgression";
  }
  return "";
}

struct SymPowerH0 {
  int k = 0, n = 0, N = 0, t = 0;
  std::int64_t h0 = 0;
  TwistWindow window = TwistWindow::H0Row;
  int i_max = 0;
};

namespace detail {

inline int koszul_i_max(int k, int n, int N) { return std::min(N, n - k + 1); }

// Space of coefficients of O(e) in cohomological degree `row` (0 or k): H^0 has basis the
// degree-e monomials in y_0..y_k; H^k the multisets of size -e-k-1 (dual inverse monomials).
inline SpaceExpr line_space(int k, int e, int row) {
  if (row == 0) return e >= 0 ? SpaceExpr::sym(e, DU(k)) : SpaceExpr::sym(0, DU(k));
  return -e - k - 1 >= 0 ? SpaceExpr::sym(-e - k - 1, DU(k)) : SpaceExpr::sym(0, DU(k));
}

inline bool line_nonzero(int k, int e, int row) { return row == 0 ? e >= 0 : e <= -k - 1; }

struct KoszulTerm {
  SpaceExpr wedge, poly, line;
  bool present = false;
  std::size_t dim() const { return present ? wedge.dim() * poly.dim() * line.dim() : 0; }
};

inline KoszulTerm koszul_term(int k, int n, int N, int t, int i, int row) {
  KoszulTerm term{SpaceExpr::wedge(0, SymU(n - k)), SpaceExpr::sym(0, SymU(n)), line_space(k, 0, 0), false};
  if (i < 0 || i > koszul_i_max(k, n, N) || !line_nonzero(k, t - i, row)) return term;
  term.wedge = SpaceExpr::wedge(i, SymU(n - k));
  term.poly = SpaceExpr::sym(N - i, SymU(n));
  term.line = line_space(k, t - i, row);
  term.present = true;
  return term;
}

// H^row(G_i(t)) -> H^row(G_{i-1}(t)).
inline ExactMatrix koszul_differential(int k, int n, int N, int t, int i, int row, Field f) {
  KoszulTerm src = koszul_term(k, n, N, t, i, row), dst = koszul_term(k, n, N, t, i - 1, row);
  MatrixBuilder mb(f, dst.dim(), src.dim());
  if (!src.present || !dst.present) return mb.build();
  const auto& wb = src.wedge.basis();
  const auto& pb = src.poly.basis();
  const auto& lb = src.line.basis();
  const std::size_t np = pb.size(), nl = lb.size();
  const std::size_t dp = dst.poly.dim(), dl = dst.line.dim();
  for (std::size_t a = 0; a < wb.size(); ++a)
    for (std::size_t s = 0; s < np; ++s)
      for (std::size_t w = 0; w < nl; ++w) {
        std::size_t col = (a * np + s) * nl + w;
        const auto& A = wb[a].parts;
        for (std::size_t l = 0; l < A.size(); ++l) {
          std::vector<int> rest = A;
          rest.erase(rest.begin() + static_cast<long>(l));
          std::size_t ra = dst.wedge.index_of(rest);
          long long sign = (l % 2) ? -1 : 1;
          for (int j = 0; j <= k; ++j) {
            std::vector<int> mono = pb[s].parts;
            mono.push_back(A[l] + j);
            sort_weakly_decreasing(mono);
            std::vector<int> lw = lb[w].parts;
            if (row == 0) {
              lw.push_back(j);
              sort_weakly_decreasing(lw);
            } else {
              auto it = std::find(lw.begin(), lw.end(), j);
              if (it == lw.end()) continue;
              lw.erase(it);
            }
            std::size_t r = (ra * dp + dst.poly.index_of(mono)) * dl + dst.line.index_of(lw);
            mb.add(r, col, sign);
          }
        }
      }
  return mb.build();
}

}  // namespace detail

// The (k+1)-minors of the Hankel matrix (z_{a+j}), a = 0..n-k, j = 0..k, times all monomials
// of degree N-k-1: the image of the transgression H^k(G_{k+1}) -> H^0(G_0) at twist 0.
// Columns are indexed by (row subset, monomial); rows by the degree-N monomials.
inline ExactMatrix hankel_minor_multiples(int k, int n, int N, Field f = Field::rationals()) {
  require(k >= 0 && n >= k, "hankel minors need 0 <= k <= n");
  SpaceExpr target = SpaceExpr::sym(std::max(N, 0), SymU(n));
  if (N < k + 1 || n - k + 1 < k + 1) return ExactMatrix(f, N >= 0 ? target.dim() : 0, 0);
  SpaceExpr rows = SpaceExpr::wedge(k + 1, SymU(n - k));
  SpaceExpr mult = SpaceExpr::sym(N - k - 1, SymU(n));
  MatrixBuilder mb(f, target.dim(), rows.dim() * mult.dim());
  std::vector<int> perm(k + 1);
  for (std::size_t a = 0; a < rows.dim(); ++a) {
    const auto& A = rows.basis()[a].parts;
    // Expand det(z_{A_r + c}) as a polynomial: monomial -> coefficient.
    std::map<std::vector<int>, long long> det;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> mono(k + 1);
      for (int r = 0; r <= k; ++r) mono[r] = A[r] + perm[r];
      std::vector<int> tmp = perm;
      int sign = 1;
      for (std::size_t x = 0; x < tmp.size(); ++x)
        for (std::size_t y = x + 1; y < tmp.size(); ++y)
          if (tmp[x] > tmp[y]) sign = -sign;
      sort_weakly_decreasing(mono);
      det[mono] += sign;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t s = 0; s < mult.dim(); ++s) {
      std::size_t col = a * mult.dim() + s;
      for (const auto& [mono, c] : det) {
        if (c == 0) continue;
        std::vector<int> full = mono;
        full.insert(full.end(), mult.basis()[s].parts.begin(), mult.basis()[s].parts.end());
        sort_weakly_decreasing(full);
        mb.add(target.index_of(full), col, c);
      }
    }
  }
  return mb.build();
}

// h^0(Sym^N E^k_{n-k}) at twist 0: S_N modulo the transgression image.
inline std::int64_t sym_power_sections(int k, int n, int N, Field f = Field::rationals()) {
  require(k >= 1 && n >= k && N >= 0, "sym_power_sections needs n >= k >= 1, N >= 0");
  std::int64_t dim_sn = multichoose(n + 1, N);
  return dim_sn - static_cast<std::int64_t>(rank(hankel_minor_multiples(k, n, N, f)));
}

// h^0(Sym^N E (t)) for E = E^k_{n-k}, from whichever row of the hypercohomology spectral
// sequence of G_.(t) survives. Twists mixing both rows are rejected, except t = 0 where the
// only interaction is the transgression onto S_N.
inline SymPowerH0 h0_symN_E_twist(int k, int n, int N, int t, Field f = Field::rationals()) {
  require(k >= 1 && n >= k, "h0_symN_E_twist needs n >= k >= 1");
  require(N >= 0, "h0_symN_E_twist needs N >= 0");
  SymPowerH0 r{k, n, N, t, 0, TwistWindow::H0Row, detail::koszul_i_max(k, n, N)};
  bool any_h0 = false, any_hk = false;
  for (int i = 0; i <= r.i_max; ++i) {
    any_h0 = any_h0 || t - i >= 0;
    any_hk = any_hk || t - i <= -k - 1;
  }
  if (!any_hk) {
    std::size_t c0 = detail::koszul_term(k, n, N, t, 0, 0).dim();
    std::size_t rk = c0 == 0 ? 0 : rank(detail::koszul_differential(k, n, N, t, 1, 0, f));
    r.h0 = static_cast<std::int64_t>(c0 - rk);
    r.window = TwistWindow::H0Row;
    return r;
  }
  if (!any_h0) {
    // H^0(Sym^N E(t)) is the homology of the H^k row at G_k.
    std::size_t ck = detail::koszul_term(k, n, N, t, k, k).dim();
    std::size_t out = ck == 0 ? 0 : rank(detail::koszul_differential(k, n, N, t, k, k, f));
    std::size_t in = ck == 0 ? 0 : rank(detail::koszul_differential(k, n, N, t, k + 1, k, f));
    r.h0 = static_cast<std::int64_t>(ck - out - in);
    r.window = TwistWindow::HkRow;
    return r;
  }
  if (t == 0) {
    r.h0 = sym_power_sections(k, n, N, f);
    r.window = TwistWindow::Transgression;
    return r;
  }
  throw UnsupportedTwistWindow("unsupported twist window: t=" + std::to_string(t) + " mixes the H^0 and H^" +
                               std::to_string(k) + " rows for k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                               ", N=" + std::to_string(N));
}

}  // namespace hlab
