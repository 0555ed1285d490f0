#include <catch_amalgamated.hpp>

#include "hlab/linalg.hpp"
#include "hlab/maps.hpp"

using namespace hlab;

namespace {

const Field Q = Field::rationals();

// Weight multiset of m-subsets of {0..n}, weight of j being 2j-n; computed by a
// subset-sum DP independent of basis enumeration.
CharPoly wedge_sym_character_oracle(int m, int n) {
  // dp[c][s]: number of c-subsets of the processed exponents with exponent sum s.
  int maxs = (n + 1) * n;
  std::vector<std::vector<std::int64_t>> dp(m + 1, std::vector<std::int64_t>(maxs + 1, 0));
  dp[0][0] = 1;
  for (int j = 0; j <= n; ++j)
    for (int c = m; c >= 1; --c)
      for (int s = maxs; s >= j; --s) dp[c][s] += dp[c - 1][s - j];
  CharPoly out;
  for (int s = 0; s <= maxs; ++s)
    if (dp[m][s]) out[2 * s - m * n] += dp[m][s];
  return out;
}

std::size_t pos(const SpaceExpr& s, std::vector<int> parts) { return s.index_of(parts); }

}  // namespace

TEST_CASE("basis enumeration examples") {
  SpaceExpr s2 = SymU(2);
  REQUIRE(s2.dim() == 3);
  CHECK(s2.describe(0) == "x^0");
  CHECK(s2.describe(2) == "x^2");
  SpaceExpr w = SpaceExpr::wedge(2, SymU(2));
  REQUIRE(w.basis().size() == 3);
  CHECK(w.basis()[0].parts == std::vector<int>{1, 0});
  CHECK(w.basis()[1].parts == std::vector<int>{2, 0});
  CHECK(w.basis()[2].parts == std::vector<int>{2, 1});
  SpaceExpr d = SpaceExpr::divided(2, SymU(1));
  REQUIRE(d.dim() == 3);
  CHECK(d.basis()[0].parts == std::vector<int>{0, 0});
  CHECK(d.basis()[1].parts == std::vector<int>{1, 0});
  CHECK(d.basis()[2].parts == std::vector<int>{1, 1});
  CHECK_THROWS_AS(SpaceExpr::wedge(4, SymU(2)), InvalidParameter);
}

TEST_CASE("dimensions and characters") {
  CHECK(U().character() == CharPoly{{-1, 1}, {1, 1}});
  CharPoly expect{{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}};
  CHECK(SpaceExpr::wedge(2, SymU(3)).character() == expect);
  CHECK(SpaceExpr::sym(2, DU(2)).character() == expect);
  std::vector<SpaceExpr> samples = {
      SpaceExpr::tensor(SymU(3), SpaceExpr::wedge(2, SymU(4))),
      SpaceExpr::divided(3, SpaceExpr::sym(2, DU(2))),
      SpaceExpr::wedge(3, SpaceExpr::tensor(U(), SymU(2))),
      SpaceExpr::sym(0, SymU(5)),
      SpaceExpr::field(),
  };
  for (const auto& s : samples) {
    CHECK(s.basis().size() == s.dim());
    CHECK(eval_at_one(s.character()) == static_cast<std::int64_t>(s.dim()));
    CHECK(palindromic(s.character()));
  }
}

TEST_CASE("character identity of Hermite reciprocity") {
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= n; ++m) {
      CharPoly lhs = SpaceExpr::wedge(m, SymU(n)).character();
      CHECK(lhs == wedge_sym_character_oracle(m, n));
      CHECK(lhs == SpaceExpr::sym(n - m + 1, DU(m)).character());
      // Second isomorphism: D^m(Sym^{n-m} U) and Sym^{n-m}(D^m U).
      CHECK(SpaceExpr::divided(m, SymU(n - m)).character() == SpaceExpr::sym(n - m, DU(m)).character());
    }
}

TEST_CASE("multiplication and comultiplication") {
  ExactMatrix m11 = mult_map(1, 1);
  for (std::size_t j = 0; j < m11.cols(); ++j) CHECK(m11.column(j).size() == 1);
  CHECK(m11.at(2, 3).is_one());  // x (x) x -> x^2
  CHECK(m11.at(1, 2).is_one());  // x (x) 1 -> x
  for (int b = 0; b <= 4; ++b) CHECK(mult_map(0, b) == ExactMatrix::identity(Q, b + 1));
  ExactMatrix c211 = comult_map(2, 1, 1);
  CHECK(c211.column(1).size() == 2);  // x^{(1)} -> 1(x)x + x(x)1
  CHECK(c211.at(1, 1).is_one());
  CHECK(c211.at(2, 1).is_one());
  CHECK(c211.column(2).size() == 1);
  CHECK(c211.at(3, 2).is_one());
  for (int a = 0; a <= 5; ++a) CHECK(comult_map(a, a, 0) == ExactMatrix::identity(Q, a + 1));
  CHECK(comult_map(4, 2, 2).transpose() == mult_map(2, 2).without_labels());
  CHECK_THROWS_AS(comult_map(3, 1, 1), InvalidParameter);
}

TEST_CASE("comultiplication is coassociative") {
  for (int a = 0; a <= 6; ++a)
    for (int p = 0; p <= a; ++p)
      for (int q = 0; p + q <= a; ++q) {
        int r = a - p - q;
        ExactMatrix left = compose(kronecker(comult_map(p + q, p, q), ExactMatrix::identity(Q, DU(r))),
                                   comult_map(a, p + q, r));
        ExactMatrix right = compose(kronecker(ExactMatrix::identity(Q, DU(p)), comult_map(q + r, q, r)),
                                    comult_map(a, p, q + r));
        CHECK(left.without_labels() == right.without_labels());
      }
}

TEST_CASE("contraction") {
  for (int d = 0; d <= 5; ++d) CHECK(contraction(d, 0) == ExactMatrix::identity(Q, d + 1));
  // <x^{(2)}, x> = x^{(1)}.
  CHECK(contraction(2, 1).at(1, 2 * 2 + 1).is_one());
  CHECK_THROWS_AS(contraction(2, 3), InvalidParameter);
  // <<f, g>, h> = <f, g h>.
  for (int d = 0; d <= 6; ++d)
    for (int r = 0; r <= d; ++r)
      for (int s = 0; r + s <= d; ++s) {
        ExactMatrix lhs = compose(contraction(d - r, s),
                                  kronecker(contraction(d, r), ExactMatrix::identity(Q, SymU(s))));
        ExactMatrix rhs = compose(contraction(d, r + s), kronecker(ExactMatrix::identity(Q, DU(d)), mult_map(r, s)));
        CHECK(lhs.without_labels() == rhs.without_labels());
      }
}

TEST_CASE("evaluation identity P(u) = <u^{(d)}, P>") {
  // u = a + b x, u^{(d)} = sum_k a^{d-k} b^k x^{(k)}; P = sum_j p_j x^j; P(u) = sum p_j a^{d-j} b^j.
  const int d = 4;
  std::vector<long long> p = {3, -1, 0, 2, 5};
  for (long long a : {1, 2, -3})
    for (long long b : {0, 1, 4}) {
      ExactMatrix c = contraction(d, d);
      Scalar got(Q, 0);
      for (int k = 0; k <= d; ++k)
        for (int j = 0; j <= d; ++j) {
          Scalar coeff = c.at(0, k * (d + 1) + j);
          if (coeff.is_zero()) continue;
          long long pw = 1;
          for (int t = 0; t < d - k; ++t) pw *= a;
          for (int t = 0; t < k; ++t) pw *= b;
          got = got + coeff * Scalar(Q, pw * p[j]);
        }
      long long want = 0;
      for (int j = 0; j <= d; ++j) {
        long long pw = p[j];
        for (int t = 0; t < d - j; ++t) pw *= a;
        for (int t = 0; t < j; ++t) pw *= b;
        want += pw;
      }
      CHECK(got == Scalar(Q, want));
    }
}

TEST_CASE("canonical embedding") {
  for (Mode mode : {Mode::Wedge, Mode::Divided}) {
    ExactMatrix e = canonical_embed(1, SymU(2), SymU(3), mode);
    CHECK(e == ExactMatrix::identity(Q, 12));
  }
  // x^{(2)} (x) (x ^ 1) -> (x(x)x) ^ (x(x)1) -> x^2 ^ x after multiplication.
  ExactMatrix e = canonical_embed(2, SymU(1), SymU(1), Mode::Wedge);
  ExactMatrix full = compose(wedge_power_map(2, mult_map(1, 1)), e);
  SpaceExpr w = SpaceExpr::wedge(2, SymU(2));
  REQUIRE(full.column(2).size() == 1);
  CHECK(full.column(2)[0].index == pos(w, {2, 1}));
  CHECK(full.column(2)[0].value.is_one());
  // Character containment for the star map image.
  ExactMatrix star = compose(wedge_power_map(2, mult_map(1, 2)), canonical_embed(2, U(), SymU(2), Mode::Wedge));
  SpaceExpr w23 = SpaceExpr::wedge(2, SymU(3));
  CharPoly target = w23.character();
  CharPoly image;
  const auto& weights = w23.weights();
  // The map is weight preserving, so the image character is the sum of block ranks by weight.
  std::map<int, std::vector<std::size_t>> rows_by_weight;
  for (std::size_t i = 0; i < weights.size(); ++i) rows_by_weight[weights[i]].push_back(i);
  for (const auto& [wt, rows] : rows_by_weight) {
    ExactMatrix sub(Q, rows.size(), star.cols());
    for (std::size_t j = 0; j < star.cols(); ++j) {
      SparseVector v;
      for (std::size_t t = 0; t < rows.size(); ++t)
        if (!star.at(rows[t], j).is_zero()) v.push_back({t, star.at(rows[t], j)});
      sub.set_column(j, v);
    }
    image[wt] = static_cast<std::int64_t>(rank(sub));
  }
  for (const auto& [wt, c] : image) CHECK(c <= target[wt]);
}

TEST_CASE("divided embedding sends pairs of orbit sums to orbit sums") {
  // D^2 U (x) D^2 U -> D^2(U (x) U): x^{(1)} (x) x^{(1)} hits {(1,0),(0,1)} and {(1,1),(0,0)}.
  ExactMatrix e = canonical_embed(2, U(), U(), Mode::Divided);
  SpaceExpr t = SpaceExpr::divided(2, SpaceExpr::tensor(U(), U()));
  const auto& col = e.column(1 * 3 + 1);
  REQUIRE(col.size() == 2);
  CHECK(col[0].index == t.index_of({2, 1}));
  CHECK(col[1].index == t.index_of({3, 0}));
}

TEST_CASE("functor maps compose functorially") {
  ExactMatrix f = mult_map(1, 1);
  ExactMatrix g = comult_map(2, 1, 1).without_labels().with_labels(SymU(2), SpaceExpr::tensor(SymU(1), SymU(1)));
  for (int m = 0; m <= 3; ++m) {
    CHECK(wedge_power_map(m, compose(f, g)).without_labels() ==
          compose(wedge_power_map(m, f), wedge_power_map(m, g)).without_labels());
    CHECK(divided_power_map(m, compose(f, g)).without_labels() ==
          compose(divided_power_map(m, f), divided_power_map(m, g)).without_labels());
    CHECK(symmetric_power_map(m, compose(f, g)).without_labels() ==
          compose(symmetric_power_map(m, f), symmetric_power_map(m, g)).without_labels());
  }
}

TEST_CASE("constructions specialize to prime fields") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    Field fp = Field::prime(p);
    CHECK(mult_map(2, 3, fp) == mult_map(2, 3).reduce(fp));
    CHECK(canonical_embed(2, U(), SymU(3), Mode::Divided, fp) ==
          canonical_embed(2, U(), SymU(3), Mode::Divided).reduce(fp));
    CHECK(wedge_power_map(3, mult_map(1, 3, fp)) == wedge_power_map(3, mult_map(1, 3)).reduce(fp));
  }
}
