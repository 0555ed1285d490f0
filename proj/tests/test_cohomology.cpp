#include <catch_amalgamated.hpp>

#include "hlab/cohomology.hpp"

using namespace hlab;

TEST_CASE("line bundles on projective space") {
  CHECK(line_cohomology(2, 3).h0 == 10);
  CHECK(line_cohomology(2, 3).hk == 0);
  CHECK(line_cohomology(2, -3).h0 == 0);
  CHECK(line_cohomology(2, -3).hk == 1);
  CHECK(line_cohomology(1, -1).h0 == 0);
  CHECK(line_cohomology(1, -1).hk == 0);
  // Serre duality: h^k(O(d)) = h^0(O(-d-k-1)).
  for (int k = 1; k <= 4; ++k)
    for (int d = -10; d <= 10; ++d) CHECK(line_cohomology(k, d).hk == line_cohomology(k, -d - k - 1).h0);
}

TEST_CASE("Kunneth on products") {
  CHECK(product_cohomology(1, 1, 3, 0) == CohomologyVector{{0, 4}});
  CHECK(product_cohomology(1, 1, 1, -2) == CohomologyVector{{1, 2}});
  for (int b = -6; b <= 6; ++b) CHECK(product_cohomology(1, 1, -1, b).empty());
  CHECK(product_cohomology(0, 2, 5, -3) == CohomologyVector{{2, 1}});
}

TEST_CASE("exterior powers of Schwarzenberger bundles") {
  CHECK(wedge_E_cohomology(2, 1, 1, 0).h == CohomologyVector{{0, 4}});
  CHECK(wedge_E_cohomology(2, 1, 1, -1).is_zero());
  CHECK(wedge_E_cohomology(2, 1, 1, -5).h == CohomologyVector{{2, 4}});
  CHECK_THROWS_AS(wedge_E_cohomology(2, 1, 3, 0), InvalidParameter);
  // rank E = m and det E = O(d+1): Wedge^m E = O(d+1), Wedge^0 E = O.
  for (int m = 1; m <= 4; ++m)
    for (int d = 0; d <= 4; ++d)
      for (int t = -9; t <= 3; ++t) {
        LineCohomology top = line_cohomology(m, d + 1 + t), bottom = line_cohomology(m, t);
        CohTable a = wedge_E_cohomology(m, d, m, t), b = wedge_E_cohomology(m, d, 0, t);
        CHECK(a.euler() == top.h0 + (m % 2 ? -top.hk : top.hk));
        CHECK(b.euler() == bottom.h0 + (m % 2 ? -bottom.hk : bottom.hk));
      }
}

TEST_CASE("root sequences") {
  CHECK(root_sequence(3, 2, 1) == std::vector<int>{-1, -2, -6});
  CHECK(root_sequence(2, 1, 2) == std::vector<int>{-3, -4});
  CHECK(root_sequence(2, 1, 0) == std::vector<int>{-1, -2});
  for (int m = 1; m <= 4; ++m)
    for (int d = 0; d <= 4; ++d)
      for (int i = 0; i <= m; ++i) {
        auto r = root_sequence(m, d, i);
        CHECK(static_cast<int>(r.size()) == m);
        CHECK(std::is_sorted(r.begin(), r.end(), std::greater<int>()));
        CHECK(std::adjacent_find(r.begin(), r.end()) == r.end());
        INFO("m=" << m << " d=" << d << " i=" << i);
        CHECK(supernatural_check(m, d, i).pass());
      }
}

TEST_CASE("Euler characteristic is C(m,i)/m! times the product over the roots") {
  for (int m = 1; m <= 4; ++m)
    for (int d = 0; d <= 4; ++d)
      for (int i = 0; i <= m; ++i) {
        auto roots = root_sequence(m, d, i);
        std::int64_t fact = 1;
        for (int j = 2; j <= m; ++j) fact *= j;
        for (int t = -12; t <= 6; ++t) {
          std::int64_t prod = binom(m, i);
          for (int r : roots) prod *= (t - r);
          CHECK(wedge_E_cohomology(m, d, i, t).euler() * fact == prod);
        }
      }
}

TEST_CASE("sections of the top exterior power match the Hermite dimension") {
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= std::min(n, 4); ++m) {
      auto h = wedge_E_cohomology(m, n - m, m, 0).h;
      CHECK(h[0] == static_cast<std::int64_t>(SpaceExpr::sym(n - m + 1, DU(m)).dim()));
    }
}

TEST_CASE("twisted symmetric powers: one-dimensional cases") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
    INFO("k=" << k << " n=" << n);
    SymPowerH0 r = h0_symN_E_twist(k, n, k, -n + 2 * k - 2);
    CHECK(r.h0 == 1);
    CHECK(r.window == TwistWindow::HkRow);
  }
  CHECK(h0_symN_E_twist(1, 2, 1, -2).h0 == 1);
  CHECK(h0_symN_E_twist(2, 5, 2, -3).h0 == 1);
}

TEST_CASE("twisted symmetric powers on P^1 are line bundles") {
  // E^1_{n-1} = O(n), so Sym^N E (t) = O(nN + t).
  for (int n = 1; n <= 5; ++n)
    for (int N = 0; N <= 4; ++N)
      for (int t = -2 * n - 3; t <= 3; ++t) {
        INFO("n=" << n << " N=" << N << " t=" << t);
        SymPowerH0 r;
        try {
          r = h0_symN_E_twist(1, n, N, t);
        } catch (const UnsupportedTwistWindow&) {
          CHECK(t != 0);
          continue;
        }
        CHECK(r.h0 == std::max(0, n * N + t + 1));
      }
}

TEST_CASE("twisted E agrees with the pushforward description") {
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= k + 4; ++n)
      for (int t = -(n + 3); t <= 2; ++t) {
        INFO("k=" << k << " n=" << n << " t=" << t);
        auto expect = wedge_E_cohomology(k, n - k, 1, t).h;
        SymPowerH0 r;
        try {
          r = h0_symN_E_twist(k, n, 1, t);
        } catch (const UnsupportedTwistWindow&) {
          CHECK(t != 0);
          continue;
        }
        CHECK(r.h0 == (expect.count(0) ? expect.at(0) : 0));
      }
}

TEST_CASE("H^0 row agrees with the alternating sum of the resolution") {
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 6; ++n)
      for (int N = 0; N <= 3; ++N)
        for (int t = 0; t <= 2; ++t) {
          SymPowerH0 r;
          try {
            r = h0_symN_E_twist(k, n, N, t);
          } catch (const UnsupportedTwistWindow&) {
            continue;
          }
          if (r.window != TwistWindow::H0Row) continue;
          std::int64_t chi = 0;
          for (int i = 0; i <= r.i_max; ++i) {
            std::int64_t term = binom(n - k + 1, i) * multichoose(n + 1, N - i) * line_cohomology(k, t - i).h0;
            chi += (i % 2 ? -term : term);
          }
          INFO("k=" << k << " n=" << n << " N=" << N << " t=" << t);
          CHECK(r.h0 == chi);
        }
}

TEST_CASE("mixed windows are rejected") {
  CHECK_THROWS_AS(h0_symN_E_twist(1, 3, 3, 1), UnsupportedTwistWindow);
  CHECK_THROWS_AS(h0_symN_E_twist(1, 3, 3, 1), InvalidParameter);
  CHECK_THROWS_AS(h0_symN_E_twist(0, 3, 1, 0), InvalidParameter);
}

TEST_CASE("twist zero sections of Sym^N E") {
  // N <= k: no minors, all of S_N survives.
  CHECK(sym_power_sections(2, 5, 2) == multichoose(6, 2));
  // k = 1, n = 3: S/(2-minors of the 3x2 Hankel matrix) is the twisted cubic, h(N) = 3N + 1.
  for (int N = 0; N <= 5; ++N) CHECK(sym_power_sections(1, 3, N) == 3 * N + 1);
  CHECK(h0_symN_E_twist(1, 3, 4, 0).window == TwistWindow::Transgression);
  CHECK(h0_symN_E_twist(1, 3, 4, 0).h0 == 13);
}
