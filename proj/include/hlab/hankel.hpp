#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hlab/cohomology.hpp"
#include "hlab/combinatorics.hpp"
#include "hlab/linalg.hpp"
#include "hlab/report.hpp"
#include "hlab/space.hpp"

namespace hlab {

// Entry (i, j) of the (n-k+1) x (k+1) Hankel matrix is the variable z_{i+j}.
struct HankelMatrix {
  int n = 0, k = 0;
  std::vector<std::vector<int>> var;

  std::size_t rows() const { return var.size(); }
  std::size_t cols() const { return var.empty() ? 0 : var[0].size(); }

  ExactMatrix evaluate(const std::vector<Scalar>& z) const {
    if (static_cast<int>(z.size()) != n + 1) throw DimensionMismatch("Hankel evaluation needs n+1 coordinates");
    Field f = z[0].field();
    MatrixBuilder mb(f, rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j)
        if (!z[var[i][j]].is_zero()) mb.add(i, j, z[var[i][j]]);
    return mb.build();
  }
};

inline HankelMatrix hankel_matrix(int n, int k) {
  require(k >= 0 && k <= n, "hankel_matrix needs 0 <= k <= n");
  HankelMatrix h{n, k, std::vector<std::vector<int>>(n - k + 1, std::vector<int>(k + 1))};
  for (int i = 0; i <= n - k; ++i)
    for (int j = 0; j <= k; ++j) h.var[i][j] = i + j;
  return h;
}

// beta_{i,j}, zero entries omitted.
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;

  std::int64_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void set(int i, int j, std::int64_t v) {
    if (v != 0) entries[{i, j}] = v;
    else entries.erase({i, j});
  }
  int projective_dimension() const {
    int p = -1;
    for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
    return p;
  }
  std::vector<std::int64_t> row_totals() const {
    std::vector<std::int64_t> t(static_cast<std::size_t>(projective_dimension() + 1), 0);
    for (const auto& [ij, v] : entries) t[ij.first] += v;
    return t;
  }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

inline void require_secant_range(int n, int k) {
  require(k >= 1 && 2 * k <= n + 1, "need 1 <= k <= (n+1)/2, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

inline BettiTable eagon_northcott_betti(int n, int k) {
  require_secant_range(n, k);
  BettiTable b;
  b.set(0, 0, 1);
  for (int i = 1; i <= n - 2 * k + 1; ++i) b.set(i, i + k, binom(i - 1 + k, k) * binom(n - k + 1, i + k));
  return b;
}

// numerator(t) / (1 - t)^denom_power.
struct HilbertSeries {
  std::vector<std::int64_t> numerator;
  int denom_power = 0;

  std::int64_t numerator_at_one() const {
    std::int64_t s = 0;
    for (auto c : numerator) s += c;
    return s;
  }
  // Coefficients of t^0 .. t^{terms-1}.
  std::vector<std::int64_t> expand(int terms) const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(terms), 0);
    for (int d = 0; d < terms; ++d)
      for (std::size_t a = 0; a < numerator.size() && static_cast<int>(a) <= d; ++a)
        c[d] += numerator[a] * multichoose(denom_power, d - static_cast<int>(a));
    return c;
  }
  // Cancel factors (1 - t) shared by numerator and denominator.
  HilbertSeries reduced() const {
    HilbertSeries h = *this;
    while (!h.numerator.empty() && h.back_trim() && h.denom_power > 0 && h.numerator_at_one() == 0) {
      // Synthetic division by (1 - t): q_a = sum_{b <= a} p_b.
      std::vector<std::int64_t> q(h.numerator.size() - 1, 0);
      std::int64_t acc = 0;
      for (std::size_t a = 0; a + 1 < h.numerator.size(); ++a) q[a] = (acc += h.numerator[a]);
      h.numerator = std::move(q);
      --h.denom_power;
    }
    h.back_trim();
    return h;
  }
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  bool back_trim() {
    while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
    return !numerator.empty();
  }
};

inline HilbertSeries hilbert_series(int n, int k) {
  require_secant_range(n, k);
  HilbertSeries h{{}, 2 * k};
  for (int i = 0; i <= k; ++i) h.numerator.push_back(multichoose(n + 1 - 2 * k, i));
  return h.reduced();
}

// Alternating Betti sum over (1 - t)^{n+1}, then reduced.
inline HilbertSeries series_from_betti(const BettiTable& b, int n) {
  HilbertSeries h{{}, n + 1};
  for (const auto& [ij, v] : b.entries) {
    if (static_cast<int>(h.numerator.size()) <= ij.second) h.numerator.resize(ij.second + 1, 0);
    h.numerator[ij.second] += (ij.first % 2 ? -v : v);
  }
  return h.reduced();
}

struct HilbertCrossCheck {
  HilbertSeries closed, from_betti;
  int terms = 0;
  bool expansion_match = false, lowest_terms_match = false;
  bool pass() const { return expansion_match && lowest_terms_match; }
};

inline HilbertCrossCheck hilbert_cross_check(int n, int k) {
  HilbertCrossCheck c{hilbert_series(n, k), series_from_betti(eagon_northcott_betti(n, k), n), 2 * n};
  c.expansion_match = c.closed.expand(c.terms) == c.from_betti.expand(c.terms);
  c.lowest_terms_match = c.closed == c.from_betti;
  return c;
}

struct SecantInvariants {
  int n = 0, k = 0;
  int dim_proj = 0;
  std::int64_t degree = 0;
  int codim = 0;
  int class_group_order = 0;
  int ulrich_index = 0;
  bool degree_identity = false;  // sum_i C(n-2k+i, i) == C(n-k+1, k)
};

inline SecantInvariants secant_invariants(int n, int k) {
  require_secant_range(n, k);
  SecantInvariants s{n, k, 2 * k - 1, binom(n - k + 1, k), n + 1 - 2 * k, n - 2 * k + 2, n - 2 * k + 1, false};
  std::int64_t sum = 0;
  for (int i = 0; i <= k; ++i) sum += multichoose(n + 1 - 2 * k, i);
  s.degree_identity = sum == s.degree;
  return s;
}

// The rank-one MCM modules M_r, r = -1 .. n-2k+1. Generators sit in degree 0 for every r,
// including M_{-1}, whose presentation is only fixed up to a shift.
struct McmData {
  int n = 0, k = 0, r = 0;
  std::int64_t mu = 0;
  std::int64_t degree = 0;
  bool ulrich = false;
  std::vector<std::int64_t> resolution_dims;  // F_i, i = 0..n-k+1; filled for r = n-2k+1 and r = -1
  std::vector<int> degree_shifts;             // F_i = ... (x) S(-shift_i)
};

inline std::vector<std::int64_t> ulrich_resolution_dims(int n, int k) {
  std::vector<std::int64_t> d;
  for (int i = 0; i <= n - k + 1; ++i) d.push_back(binom(n - k + 1, i) * multichoose(k + 1, n - 2 * k + 1 - i));
  return d;
}

inline std::vector<std::int64_t> dual_resolution_dims(int n, int k) {
  std::vector<std::int64_t> d;
  for (int i = 0; i <= n - k + 1; ++i) d.push_back(binom(n - k + 1, i + k) * multichoose(k + 1, i));
  return d;
}

inline McmData mcm_data(int n, int k, int r) {
  require_secant_range(n, k);
  require(r >= -1 && r <= n - 2 * k + 1,
          "r must lie in -1..n-2k+1 (rank one MCM range), got r=" + std::to_string(r));
  McmData m{n, k, r, 0, binom(n - k + 1, k), false, {}, {}};
  if (r >= 0) m.mu = binom(r + k, k);
  if (r == n - 2 * k + 1) m.resolution_dims = ulrich_resolution_dims(n, k);
  if (r == -1) m.resolution_dims = dual_resolution_dims(n, k);
  if (r == -1) m.mu = m.resolution_dims[0];
  for (std::size_t i = 0; i < m.resolution_dims.size(); ++i) m.degree_shifts.push_back(static_cast<int>(i));
  m.ulrich = m.mu == m.degree;
  return m;
}

namespace detail {

inline CharPoly character_product(const CharPoly& a, const CharPoly& b) {
  CharPoly c;
  for (const auto& [x, u] : a)
    for (const auto& [y, v] : b) c[x + y] += u * v;
  return c;
}

// Character of Wedge^a(X), Sym^a(X) or D^a(X); empty when the space is zero.
inline CharPoly functor_character(char kind, int a, const SpaceExpr& x) {
  if (a < 0) return {};
  if (kind == 'w') {
    if (static_cast<std::uint64_t>(a) > x.dim()) return {};
    return SpaceExpr::wedge(a, x).character();
  }
  return kind == 's' ? SpaceExpr::sym(a, x).character() : SpaceExpr::divided(a, x).character();
}

}  // namespace detail

struct GeneralizedHermite {
  int n = 0, k = 0, i = 0;
  std::int64_t lhs_dim = 0, rhs_dim = 0;
  bool dims_equal = false, characters_equal = false;
  bool pass() const { return dims_equal && characters_equal; }
};

// Wedge^i(Sym^{n-k} U) (x) Sym^{n-2k+1-i}(D^k U)  vs  Wedge^{i+k}(Sym^{n-k} U) (x) D^i(Sym^k U).
inline GeneralizedHermite generalized_hermite_check(int n, int k, int i) {
  require_secant_range(n, k);
  require(i >= 0 && i <= n - k + 1, "generalized_hermite_check needs 0 <= i <= n-k+1");
  CharPoly lhs = detail::character_product(detail::functor_character('w', i, SymU(n - k)),
                                           detail::functor_character('s', n - 2 * k + 1 - i, DU(k)));
  CharPoly rhs = detail::character_product(detail::functor_character('w', i + k, SymU(n - k)),
                                           detail::functor_character('d', i, SymU(k)));
  std::erase_if(lhs, [](const auto& e) { return e.second == 0; });
  std::erase_if(rhs, [](const auto& e) { return e.second == 0; });
  GeneralizedHermite g{n, k, i, eval_at_one(lhs), eval_at_one(rhs), false, false};
  g.dims_equal = g.lhs_dim == g.rhs_dim;
  g.characters_equal = lhs == rhs;
  return g;
}

// ---------------------------------------------------------------------------------------
// Brute-force Tor oracle: B_d = S_d / (minors * S_{d-k-1}) = H^0(Sym^d E^k_{n-k}), then the
// Koszul complex Wedge^i V (x) B_d with V = Sym^n U.

struct KoszulOracleLimits {
  std::size_t max_term_dim = 400000;
};

namespace detail {

// Quotient S_d / I_d with normal forms.
struct GradedPiece {
  SpaceExpr monomials;
  RowEchelon ideal;                          // RREF of I_d in monomial coordinates
  std::vector<long> quotient_pos;            // monomial -> position in B_d basis, or -1
  std::vector<std::size_t> quotient_basis;   // B_d basis (non-pivot monomials)
};

inline GradedPiece graded_piece(int n, int k, int d, Field f) {
  GradedPiece g{SpaceExpr::sym(d, SymU(n)), {}, {}, {}};
  ExactMatrix gens = hankel_minor_multiples(k, n, d, f);
  if (gens.cols() > 0) g.ideal = rref(gens.transpose());
  std::vector<bool> pivot(g.monomials.dim(), false);
  for (auto p : g.ideal.pivots) pivot[p] = true;
  g.quotient_pos.assign(g.monomials.dim(), -1);
  for (std::size_t m = 0; m < g.monomials.dim(); ++m)
    if (!pivot[m]) {
      g.quotient_pos[m] = static_cast<long>(g.quotient_basis.size());
      g.quotient_basis.push_back(m);
    }
  return g;
}

// Normal form of a single monomial in B_d coordinates.
inline SparseVector normal_form(const GradedPiece& g, std::size_t mono, Field f) {
  if (g.quotient_pos[mono] >= 0) return {{static_cast<std::size_t>(g.quotient_pos[mono]), Scalar(f, 1)}};
  // mono is a pivot: mono = -(rest of its RREF row) modulo I_d.
  std::size_t t = static_cast<std::size_t>(
      std::lower_bound(g.ideal.pivots.begin(), g.ideal.pivots.end(), mono) - g.ideal.pivots.begin());
  SparseVector out;
  for (const auto& e : g.ideal.rows[t])
    if (e.index != mono) out.push_back({static_cast<std::size_t>(g.quotient_pos[e.index]), -e.value});
  return ExactMatrix::canonical(std::move(out), g.quotient_basis.size());
}

}  // namespace detail

inline BettiTable koszul_tor_oracle(int n, int k, int max_i, Field f = Field::rationals(),
                                    KoszulOracleLimits limits = {}) {
  require_secant_range(n, k);
  require(max_i >= 0, "max_i must be nonnegative");
  const int top_degree = k + 2;  // B_d needed for d <= k+1, plus one more as differential target
  std::vector<detail::GradedPiece> pieces;
  for (int d = 0; d <= top_degree; ++d) {
    std::size_t dim_sd = static_cast<std::size_t>(multichoose(n + 1, d));
    if (dim_sd > limits.max_term_dim)
      throw ResourceLimit("koszul_tor_oracle: dim S_" + std::to_string(d) + " = " + std::to_string(dim_sd) +
                          " exceeds limit " + std::to_string(limits.max_term_dim));
    pieces.push_back(detail::graded_piece(n, k, d, f));
  }
  const SpaceExpr v = SymU(n);
  auto term_dim = [&](int i, int d) -> std::size_t {
    if (i < 0 || i > n + 1 || d < 0 || d > top_degree) return 0;
    return static_cast<std::size_t>(binom(n + 1, i)) * pieces[d].quotient_basis.size();
  };
  // Wedge^i V (x) B_d -> Wedge^{i-1} V (x) B_{d+1}.
  auto differential = [&](int i, int d) -> ExactMatrix {
    std::size_t rows = term_dim(i - 1, d + 1), cols = term_dim(i, d);
    if (rows > limits.max_term_dim || cols > limits.max_term_dim)
      throw ResourceLimit("koszul_tor_oracle: Koszul term of size " + std::to_string(std::max(rows, cols)) +
                          " exceeds limit " + std::to_string(limits.max_term_dim) + " at i=" + std::to_string(i) +
                          ", d=" + std::to_string(d));
    MatrixBuilder mb(f, rows, cols);
    if (rows == 0 || cols == 0) return mb.build();
    SpaceExpr src = SpaceExpr::wedge(i, v), dst = SpaceExpr::wedge(i - 1, v);
    const auto& from = pieces[d];
    const auto& to = pieces[d + 1];
    std::size_t nb = from.quotient_basis.size(), nt = to.quotient_basis.size();
    std::map<std::pair<int, std::size_t>, SparseVector> products;  // (variable, B_d basis) -> B_{d+1}
    for (std::size_t a = 0; a < src.dim(); ++a) {
      const auto& A = src.basis()[a].parts;
      for (std::size_t l = 0; l < A.size(); ++l) {
        std::vector<int> rest = A;
        rest.erase(rest.begin() + static_cast<long>(l));
        std::size_t ra = dst.index_of(rest);
        bool negative = l % 2;
        for (std::size_t b = 0; b < nb; ++b) {
          auto key = std::make_pair(A[l], b);
          auto it = products.find(key);
          if (it == products.end()) {
            std::vector<int> mono = from.monomials.basis()[from.quotient_basis[b]].parts;
            mono.push_back(A[l]);
            sort_weakly_decreasing(mono);
            it = products.emplace(key, detail::normal_form(to, to.monomials.index_of(mono), f)).first;
          }
          for (const auto& e : it->second) mb.add(ra * nt + e.index, a * nb + b, negative ? -e.value : e.value);
        }
      }
    }
    return mb.build();
  };
  std::map<std::pair<int, int>, std::size_t> rank_cache;
  auto rank_of = [&](int i, int d) -> std::size_t {
    if (i <= 0 || d < 0 || d + 1 > top_degree || term_dim(i, d) == 0 || term_dim(i - 1, d + 1) == 0) return 0;
    auto it = rank_cache.find({i, d});
    if (it != rank_cache.end()) return it->second;
    std::size_t r = rank(differential(i, d));
    rank_cache[{i, d}] = r;
    return r;
  };
  BettiTable out;
  for (int i = 0; i <= max_i; ++i)
    for (int j = i; j <= i + k + 1; ++j) {
      int d = j - i;
      std::size_t dim = term_dim(i, d);
      if (dim == 0) continue;
      std::size_t h = dim - rank_of(i, d) - rank_of(i + 1, d - 1);
      out.set(i, j, static_cast<std::int64_t>(h));
    }
  return out;
}

// EN table restricted to the oracle window i <= max_i, i <= j <= i+k+1.
inline BettiTable betti_window(const BettiTable& b, int max_i, int k) {
  BettiTable w;
  for (const auto& [ij, v] : b.entries)
    if (ij.first <= max_i && ij.second >= ij.first && ij.second <= ij.first + k + 1) w.set(ij.first, ij.second, v);
  return w;
}

}  // namespace hlab
