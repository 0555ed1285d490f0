#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hlab/linalg.hpp"
#include "hlab/maps.hpp"
#include "hlab/report.hpp"

namespace hlab {

namespace detail {

template <class Key>
class MatrixCache {
 public:
  template <class Make>
  ExactMatrix get(const Key& k, Make&& make) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(k);
      if (it != cache_.end()) return it->second;
    }
    ExactMatrix m = make();
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(k, std::move(m)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, ExactMatrix> cache_;
};

using StarKey = std::tuple<int, int, int, std::uint64_t>;
inline MatrixCache<StarKey>& star_cache() {
  static MatrixCache<StarKey> c;
  return c;
}
inline MatrixCache<StarKey>& generator_cache() {
  static MatrixCache<StarKey> c;
  return c;
}

}  // namespace detail

// Target of the star action on the degree-d layer.
inline SpaceExpr star_layer(int m, int d, Mode mode) {
  return mode == Mode::Wedge ? SpaceExpr::wedge(m, SymU(d)) : SpaceExpr::divided(m, SymU(d));
}

// D^m U (x) F^m(Sym^d U) -> F^m(Sym^{d+1} U) with F = Wedge or D: the canonical embedding
// followed by F^m of the multiplication U (x) Sym^d U -> Sym^{d+1} U.
inline ExactMatrix star_action(int m, int d, Mode mode, Field f = Field::rationals()) {
  require(m >= 0 && d >= 0, "star_action needs m, d >= 0");
  if (mode == Mode::Wedge) require(m <= d + 1, "star_action (wedge) needs m <= d + 1");
  return detail::star_cache().get({m, d, static_cast<int>(mode), f.characteristic()}, [&] {
    ExactMatrix emb = canonical_embed(m, U(), SymU(d), mode, f);
    ExactMatrix mult = mult_map(1, d, f);
    ExactMatrix fm = mode == Mode::Wedge ? wedge_power_map(m, mult) : divided_power_map(m, mult);
    return compose(fm, emb).with_labels(SpaceExpr::tensor(DU(m), star_layer(m, d, mode)), star_layer(m, d + 1, mode));
  });
}

// Multiplication by the basis vector x^{(k)} of D^m U on the degree-d layer.
inline ExactMatrix star_by(int m, int d, int k, Mode mode, Field f = Field::rationals()) {
  ExactMatrix s = star_action(m, d, mode, f);
  std::size_t w = star_layer(m, d, mode).dim();
  return column_block(s, static_cast<std::size_t>(k) * w, w)
      .with_labels(star_layer(m, d, mode), star_layer(m, d + 1, mode));
}

// Degree of the layer holding the generator: x^{m-1}^...^1 in Wedge^m(Sym^{m-1} U), or
// 1 in D^m(Sym^0 U).
inline int generator_degree(int m, Mode mode) { return mode == Mode::Wedge ? m - 1 : 0; }

// Sym^d(D^m U) -> layer of degree generator_degree + d, f -> f * generator. Built one
// linear factor at a time: the monomial e_{k1}...e_{kd} (k1 >= ... >= kd) acts as
// e_{k1} * (e_{k2}...e_{kd} * generator).
inline ExactMatrix generator_multiplication(int m, int d, Mode mode, Field f = Field::rationals()) {
  require(d >= 0, "degree must be nonnegative");
  require(mode == Mode::Divided ? m >= 0 : m >= 1, "generator_multiplication needs m >= 1 (wedge) or m >= 0");
  return detail::generator_cache().get({m, d, static_cast<int>(mode), f.characteristic()}, [&] {
    const SpaceExpr x = DU(m);
    const int g = generator_degree(m, mode);
    // Degree 0: the generator is the unique basis vector of its layer.
    std::vector<SparseVector> prev{SparseVector{{0, Scalar(f, 1)}}};
    for (int level = 1; level <= d; ++level) {
      ExactMatrix s = star_action(m, g + level - 1, mode, f);
      std::size_t w = star_layer(m, g + level - 1, mode).dim();
      SpaceExpr src = SpaceExpr::sym(level, x), below = SpaceExpr::sym(level - 1, x);
      std::vector<SparseVector> cur;
      cur.reserve(src.dim());
      for (const auto& mono : src.basis()) {
        std::vector<int> rest(mono.parts.begin() + 1, mono.parts.end());
        const SparseVector& v = prev[below.index_of(rest)];
        SparseVector acc;
        for (const auto& e : v)
          for (const auto& t : s.column(static_cast<std::size_t>(mono.parts[0]) * w + e.index))
            acc.push_back({t.index, t.value * e.value});
        cur.push_back(ExactMatrix::canonical(std::move(acc), s.rows()));
      }
      prev = std::move(cur);
    }
    SpaceExpr dom = SpaceExpr::sym(d, x), cod = star_layer(m, g + d, mode);
    ExactMatrix out(f, cod.dim(), dom.dim());
    for (std::size_t j = 0; j < prev.size(); ++j) out.set_column(j, prev[j]);
    return out.with_labels(dom, cod);
  });
}

struct FreenessDegree {
  int d = 0;
  std::size_t rows = 0, cols = 0, rank = 0;
  bool bijective = false;
};
struct FreenessReport {
  int m = 0;
  Mode mode = Mode::Wedge;
  Field field;
  std::vector<FreenessDegree> degrees;
  bool pass() const {
    for (const auto& d : degrees)
      if (!d.bijective) return false;
    return true;
  }
};

inline FreenessReport freeness_certificate(int m, int d_max, Mode mode, Field f = Field::rationals()) {
  require(m >= 1, "freeness_certificate needs m >= 1");
  require(d_max >= 0, "freeness_certificate needs d_max >= 0");
  FreenessReport r{m, mode, f, {}};
  for (int d = 0; d <= d_max; ++d) {
    ExactMatrix g = generator_multiplication(m, d, mode, f);
    FreenessDegree fd{d, g.rows(), g.cols(), rank(g), false};
    fd.bijective = fd.rows == fd.cols && fd.rank == fd.rows;
    r.degrees.push_back(fd);
  }
  return r;
}

namespace detail {

inline ExactMatrix beta_native(int m, int n, Field f) {
  return inverse(generator_multiplication(m, n - m + 1, Mode::Wedge, f));
}
inline ExactMatrix gamma_native(int m, int n, Field f) {
  return inverse(generator_multiplication(m, n - m, Mode::Divided, f));
}

// Over F_p: reduce the rational matrix when it is p-integral, else compute mod p.
template <class Native>
ExactMatrix via_rationals(Field f, Native&& native) {
  if (f.is_rational()) return native(f);
  ExactMatrix q = native(Field::rationals());
  if (q.p_integral(f.characteristic())) return q.reduce(f);
  return native(f);
}

}  // namespace detail

// Wedge^m(Sym^n U) -> Sym^{n-m+1}(D^m U): inverse of multiplication against x^{m-1}^...^1.
inline ExactMatrix hermite_beta(int m, int n, Field f = Field::rationals()) {
  require(m >= 1 && n >= m - 1, "hermite_beta needs 1 <= m <= n + 1");
  return detail::via_rationals(f, [&](Field g) { return detail::beta_native(m, n, g); });
}

// D^m(Sym^{n-m} U) -> Sym^{n-m}(D^m U): inverse of multiplication against 1.
inline ExactMatrix hermite_gamma(int m, int n, Field f = Field::rationals()) {
  require(m >= 0 && m <= n, "hermite_gamma needs 0 <= m <= n");
  return detail::via_rationals(f, [&](Field g) { return detail::gamma_native(m, n, g); });
}

// D^m(Sym^{n-m} U) -> Wedge^m(Sym^{n-1} U): v -> canonical_embed(v (x) x^{m-1}^...^1)
// followed by Wedge^m of the multiplication Sym^{n-m} U (x) Sym^{m-1} U -> Sym^{n-1} U.
inline ExactMatrix hermite_alpha(int m, int n, Field f = Field::rationals()) {
  require(m >= 1 && m <= n, "hermite_alpha needs 1 <= m <= n");
  ExactMatrix emb = canonical_embed(m, SymU(n - m), SymU(m - 1), Mode::Wedge, f);
  ExactMatrix wm = wedge_power_map(m, mult_map(n - m, m - 1, f));
  // Wedge^m(Sym^{m-1} U) is spanned by the generator, so columns are indexed by D^m(Sym^{n-m} U).
  return compose(wm, emb).without_labels().with_labels(SpaceExpr::divided(m, SymU(n - m)),
                                                       SpaceExpr::wedge(m, SymU(n - 1)));
}

struct HermiteReport {
  int m = 0, n = 0;
  Field field;
  std::vector<CheckResult> checks;
  bool pass() const { return all_pass(checks); }
};

namespace detail {

inline std::string first_difference(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
           "x" + std::to_string(b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!(a.at(i, j) == b.at(i, j)))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + a.at(i, j).to_string() + " vs " +
               b.at(i, j).to_string();
  return "";
}

inline CheckResult equality_check(const std::string& name, const ExactMatrix& a, const ExactMatrix& b) {
  if (a == b) return {name, true, std::to_string(a.rows()) + "x" + std::to_string(a.cols())};
  return {name, false, first_difference(a, b)};
}

inline CheckResult invertibility_check(const std::string& name, const ExactMatrix& a) {
  bool ok = is_invertible(a);
  return {name, ok, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + (ok ? " invertible" : " singular")};
}

inline CheckResult character_check(const std::string& name, const ExactMatrix& a) {
  bool ok = a.domain() && a.codomain() && a.domain()->character() == a.codomain()->character();
  return {name, ok, ok ? "characters agree" : "character mismatch"};
}

}  // namespace detail

// (i) the square: beta(m,n+1) o star == Sym-multiplication o (id (x) beta(m,n));
// (ii) the triangle: beta(m,n-1) o alpha(m,n) == gamma(m,n);
// (iii) alpha, beta, gamma invertible, with matching characters.
inline HermiteReport verify_compatibilities(int m, int n, Field f = Field::rationals()) {
  require(m >= 1 && m <= n, "verify_compatibilities needs 1 <= m <= n");
  HermiteReport r{m, n, f, {}};
  ExactMatrix alpha = hermite_alpha(m, n, f);
  ExactMatrix beta = hermite_beta(m, n, f);
  ExactMatrix gamma = hermite_gamma(m, n, f);

  ExactMatrix lhs = compose(hermite_beta(m, n + 1, f), star_action(m, n, Mode::Wedge, f));
  ExactMatrix rhs = compose(sym_mult(DU(m), 1, n - m + 1, f), kronecker(ExactMatrix::identity(f, DU(m)), beta));
  r.checks.push_back(detail::equality_check("square beta(" + std::to_string(m) + "," + std::to_string(n + 1) +
                                                ")*star == mult*(id x beta(" + std::to_string(m) + "," +
                                                std::to_string(n) + "))",
                                            lhs, rhs));
  r.checks.push_back(detail::equality_check(
      "triangle beta(" + std::to_string(m) + "," + std::to_string(n - 1) + ")*alpha == gamma",
      compose(hermite_beta(m, n - 1, f), alpha), gamma));
  r.checks.push_back(detail::invertibility_check("alpha invertible", alpha));
  r.checks.push_back(detail::invertibility_check("beta invertible", beta));
  r.checks.push_back(detail::invertibility_check("gamma invertible", gamma));
  r.checks.push_back(detail::character_check("alpha characters", alpha));
  r.checks.push_back(detail::character_check("beta characters", beta));
  r.checks.push_back(detail::character_check("gamma characters", gamma));
  return r;
}

}  // namespace hlab
