// One line per acceptance criterion. Every comparison is exact (tolerance 0); the only
// tolerances are the wall-clock limits, printed next to the measured time.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "hlab/cli.hpp"

using namespace hlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const char* what, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s > limit_s) o.fail("time limit exceeded");
  failures += !o.pass;
  std::printf("[%s] %2d %-34s exact, %.2fs (limit %.0fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, what, s, limit_s,
              o.note.empty() ? "" : ": ", o.note.c_str());
  std::fflush(stdout);
}

const Field Q = Field::rationals();
const std::vector<std::uint64_t> kPrimes{2, 3, 5, 7};

// C(a, b) = a(a-1)...(a-b+1)/b! for any integer a, so C(-1, 0) = 1.
std::int64_t choose(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  std::int64_t r = 1;
  for (std::int64_t j = 0; j < b; ++j) r = r * (a - j) / (j + 1);
  return r;
}

std::string at(std::initializer_list<int> v) {
  std::string s = "(";
  for (int x : v) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

}  // namespace

int main() {
  criterion(1, "hermite alpha/beta/gamma", 10, [] {
    Outcome o;
    std::vector<Field> fields{Q};
    for (auto p : kPrimes) fields.push_back(Field::prime(p));
    for (const Field& f : fields)
      for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 8; ++n)
          if (!verify_compatibilities(m, n, f).pass()) o.fail(f.name() + " " + at({m, n}));
    return o;
  });

  criterion(2, "freeness certificates", 10, [] {
    Outcome o;
    for (Mode mode : {Mode::Wedge, Mode::Divided})
      for (int m = 1; m <= 4; ++m)
        if (!freeness_certificate(m, 6, mode).pass()) o.fail(to_string(mode) + " m=" + std::to_string(m));
    return o;
  });

  criterion(3, "supernatural cohomology", 5, [] {
    Outcome o;
    for (int m = 1; m <= 4; ++m)
      for (int d = 0; d <= 4; ++d)
        for (int i = 0; i <= m; ++i)
          if (!supernatural_check(m, d, i).pass()) o.fail(at({m, d, i}));
    return o;
  });

  criterion(4, "Hankel oracle equivalence", 60, [] {
    Outcome o;
    for (auto [n, k] : oracle_grid()) {
      BettiTable en = eagon_northcott_betti(n, k);
      if (!(koszul_tor_oracle(n, k, en.projective_dimension()) == en)) o.fail(at({n, k}));
    }
    BettiTable b41 = eagon_northcott_betti(4, 1);
    if (b41.row_totals() != std::vector<std::int64_t>{1, 6, 8, 3}) o.fail("(4,1) is not (1;6,8,3)");
    return o;
  });

  criterion(5, "Hilbert series", 1, [] {
    Outcome o;
    for (int k = 1; k <= 4; ++k)
      for (int n = 2 * k - 1; n <= 10; ++n) {
        HilbertCrossCheck c = hilbert_cross_check(n, k);
        std::int64_t sum = 0;
        for (int i = 0; i <= k; ++i) sum += choose(n - 2 * k + i, i);
        if (!c.pass() || c.terms != 2 * n || c.closed.numerator_at_one() != binom(n - k + 1, k) ||
            sum != binom(n - k + 1, k))
          o.fail(at({n, k}));
      }
    return o;
  });

  criterion(6, "MCM, Ulrich, self-duality", 5, [] {
    Outcome o;
    for (int k = 1; k <= 3; ++k)
      for (int n = 2 * k - 1; n <= 8; ++n) {
        int top = n - 2 * k + 1;
        for (int r = 0; r <= top; ++r)
          if (mcm_data(n, k, r).mu != binom(r + k, k)) o.fail("mu " + at({n, k, r}));
        McmData u = mcm_data(n, k, top);
        if (!u.ulrich || u.mu != secant_invariants(n, k).degree) o.fail("Ulrich " + at({n, k}));
        if (u.resolution_dims != mcm_data(n, k, -1).resolution_dims) o.fail("self-duality " + at({n, k}));
        for (int i = 0; i <= n - k + 1; ++i)
          if (!generalized_hermite_check(n, k, i).pass()) o.fail("generalized Hermite " + at({n, k, i}));
      }
    return o;
  });

  criterion(7, "one-dimensional sections", 30, [] {
    Outcome o;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
      std::int64_t h = h0_symN_E_twist(k, n, k, -n + 2 * k - 2).h0;
      if (h != 1) o.fail(at({k, n}) + " gives " + std::to_string(h));
    }
    return o;
  });

  criterion(8, "Green desk-scale sweep", 300, [] {
    Outcome o;
    for (int g = 3; g <= 9; ++g) {
      if (!green_check(g).pass()) o.fail("Q g=" + std::to_string(g));
      for (auto p : kPrimes)
        if (2 * p >= static_cast<std::uint64_t>(g + 2) && !green_check(g, Field::prime(p)).pass())
          o.fail("F_" + std::to_string(p) + " g=" + std::to_string(g));
    }
    for (int i = 0; i <= 4; ++i)
      for (int d = 0; d <= 8; ++d) {
        SliceHomology h0 = slice_homology(weyman_complex(i, d));
        if (!h0.composite_zero) o.fail("d2 d1 != 0 over Q at " + at({i, d}));
        for (auto p : kPrimes) {
          SliceHomology hp = slice_homology(weyman_complex(i, d, Field::prime(p)));
          if (!hp.composite_zero) o.fail("d2 d1 != 0 over F_" + std::to_string(p) + " at " + at({i, d}));
          if (hp.homology() < h0.homology()) o.fail("specialization at " + at({i, d, static_cast<int>(p)}));
        }
      }
    return o;
  });

  criterion(9, "bigraded identification", 120, [] {
    Outcome o;
    for (int g = 3; g <= 8; ++g)
      for (int a = 1; 2 * a <= g - 1; ++a)
        for (int u = 0; u <= a; ++u)
          for (int v = 0; v <= g - 1 - a && u + v <= g - 2; ++v)
            if (!bigraded_identification(g, a, u, v).pass()) o.fail(at({g, a, u, v}));
    return o;
  });

  criterion(10, "determinism of verify all", 60, [] {
    Outcome o;
    std::ostringstream a, b, ea, eb;
    int ca = cli::run({"verify", "all"}, a, ea), cb = cli::run({"verify", "all"}, b, eb);
    if (ca != 0 || cb != 0) o.fail("verify all exited " + std::to_string(ca) + "/" + std::to_string(cb));
    if (a.str() != b.str() || a.str().empty()) o.fail("reports differ");
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
