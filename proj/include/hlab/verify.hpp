#pragma once

#include <string>
#include <vector>

#include "hlab/cohomology.hpp"
#include "hlab/hankel.hpp"
#include "hlab/hermite.hpp"
#include "hlab/report.hpp"
#include "hlab/syzygy.hpp"

namespace hlab {

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  std::size_t failed() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += !c.pass;
    return n;
  }
  bool pass() const { return failed() == 0; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hermite", "supernatural", "hankel", "selfdual", "green"};
  return names;
}

namespace detail {

inline std::string params(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += (s.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return s;
}

inline void add(SuiteResult& r, std::string name, bool pass, std::string detail = "") {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace detail

// Hermite compatibilities for m <= 4, n <= 8 and freeness for m <= 4, d <= 6.
inline SuiteResult verify_hermite(Field f) {
  SuiteResult r{"hermite", {}};
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 8; ++n) {
      HermiteReport h = verify_compatibilities(m, n, f);
      std::string bad;
      for (const auto& c : h.checks)
        if (!c.pass) bad += c.name + ": " + c.detail + "; ";
      detail::add(r, "compatibilities " + detail::params({{"m", m}, {"n", n}}), h.pass(), bad);
    }
  for (Mode mode : {Mode::Wedge, Mode::Divided})
    for (int m = 1; m <= 4; ++m)
      detail::add(r, "freeness " + to_string(mode) + " " + detail::params({{"m", m}, {"d_max", 6}}),
                  freeness_certificate(m, 6, mode, f).pass());
  return r;
}

inline SuiteResult verify_supernatural() {
  SuiteResult r{"supernatural", {}};
  for (int m = 1; m <= 4; ++m)
    for (int d = 0; d <= 4; ++d)
      for (int i = 0; i <= m; ++i) {
        SupernaturalReport s = supernatural_check(m, d, i);
        detail::add(r, "supernatural " + detail::params({{"m", m}, {"d", d}, {"i", i}}), s.pass(),
                    s.single_row ? (s.roots_match ? "" : "zero twists differ from roots") : "two nonzero rows");
      }
  return r;
}

inline const std::vector<std::pair<int, int>>& oracle_grid() {
  static const std::vector<std::pair<int, int>> g{{3, 1}, {4, 1}, {5, 1}, {4, 2}, {5, 2}, {6, 2}, {7, 3}};
  return g;
}

inline SuiteResult verify_hankel(Field f) {
  SuiteResult r{"hankel", {}};
  for (auto [n, k] : oracle_grid()) {
    BettiTable en = eagon_northcott_betti(n, k);
    detail::add(r, "oracle " + detail::params({{"n", n}, {"k", k}}),
                koszul_tor_oracle(n, k, en.projective_dimension(), f) == en);
  }
  for (int k = 1; k <= 4; ++k)
    for (int n = 2 * k - 1; n <= 10; ++n) {
      HilbertCrossCheck c = hilbert_cross_check(n, k);
      SecantInvariants s = secant_invariants(n, k);
      detail::add(r, "hilbert " + detail::params({{"n", n}, {"k", k}}),
                  c.pass() && s.degree_identity && c.closed.numerator_at_one() == s.degree);
    }
  return r;
}

inline SuiteResult verify_selfdual() {
  SuiteResult r{"selfdual", {}};
  for (int k = 1; k <= 3; ++k)
    for (int n = 2 * k - 1; n <= 8; ++n) {
      int top = n - 2 * k + 1;
      bool mu = true;
      for (int rr = 0; rr <= top; ++rr) mu &= mcm_data(n, k, rr).mu == binom(rr + k, k);
      McmData a = mcm_data(n, k, top), b = mcm_data(n, k, -1);
      detail::add(r, "mcm " + detail::params({{"n", n}, {"k", k}}),
                  mu && a.ulrich && a.resolution_dims == b.resolution_dims);
      for (int i = 0; i <= n - k + 1; ++i)
        detail::add(r, "generalized hermite " + detail::params({{"n", n}, {"k", k}, {"i", i}}),
                    generalized_hermite_check(n, k, i).pass());
    }
  return r;
}

// Over Q: g = 3..9 and the bigraded identification for g <= 8. Over F_p: the genera with
// p >= (g+2)/2, complexes, and the specialization inequality against Q.
inline SuiteResult verify_green(Field f) {
  SuiteResult r{"green", {}};
  for (int g = 3; g <= 9; ++g) {
    if (!f.is_rational() && 2 * f.characteristic() < static_cast<std::uint64_t>(g + 2)) continue;
    GreenReport rep = green_check(g, f);
    std::string bad;
    for (const auto& row : rep.rows)
      if (!row.pass()) bad += "i=" + std::to_string(row.i) + " W=" + std::to_string(row.slice.homology()) + "; ";
    detail::add(r, "green " + detail::params({{"g", g}}), rep.pass(), bad);
  }
  for (int i = 0; i <= 4; ++i)
    for (int d = 0; d <= 8; ++d) {
      SliceHomology h = slice_homology(weyman_complex(i, d, f));
      std::string name = "weyman " + detail::params({{"i", i}, {"d", d}});
      detail::add(r, name + " complex", h.composite_zero);
      if (!f.is_rational()) {
        std::size_t w0 = weyman_dim(i, d);
        detail::add(r, name + " specialization", h.homology() >= w0,
                    std::to_string(h.homology()) + " vs " + std::to_string(w0));
      }
    }
  if (!f.is_rational()) return r;
  for (int g = 3; g <= 8; ++g)
    for (int a = 1; 2 * a <= g - 1; ++a)
      for (int u = 0; u <= a; ++u)
        for (int v = 0; v <= g - 1 - a && u + v <= g - 2; ++v) {
          BigradedIdentification b = bigraded_identification(g, a, u, v, f);
          detail::add(r, "bigraded " + detail::params({{"g", g}, {"a", a}, {"u", u}, {"v", v}}),
                      b.pass(),
                      std::to_string(b.homology) + " vs " + std::to_string(b.expected));
        }
  return r;
}

inline SuiteResult run_suite(const std::string& name, Field f) {
  if (name == "hermite") return verify_hermite(f);
  if (name == "supernatural") return verify_supernatural();
  if (name == "hankel") return verify_hankel(f);
  if (name == "selfdual") return verify_selfdual();
  if (name == "green") return verify_green(f);
  throw InvalidParameter("unknown suite '" + name + "' (hermite, supernatural, hankel, selfdual, green, all)");
}

inline std::vector<SuiteResult> run_suites(const std::string& name, Field f) {
  if (name != "all") return {run_suite(name, f)};
  std::vector<SuiteResult> out;
  for (const auto& s : suite_names()) out.push_back(run_suite(s, f));
  return out;
}

}  // namespace hlab
