#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hlab/serialize.hpp"
#include "hlab/verify.hpp"

namespace hlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // internal error or a failed verification
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;

inline const char* conventions_text() {
  return R"(hlab-conventions/1

Basis order
  U has basis 1, x (indices 0, 1); weights -1 and +1.
  Sym^d V and D^d V: weakly decreasing index tuples, lexicographic ascending.
    Over U the tuple with j ones is x^j (resp. the divided monomial 1^(d-j) x^(j)).
  Wedge^d V: strictly decreasing index tuples, lexicographic ascending.
  V (x) W: pairs (a, b), a-major.
  Sym^e(D^m U) and S~ = Sym(D^(i+1) U): monomials in the basis of the inner space, same rule.

Matrices
  Columns are images of domain basis vectors. JSON stores sorted (row, col, numerator,
  denominator) quadruples, decimal strings; over F_p the residue in [0, p) and denominator 1.
  Kernel vectors are normalized to a leading one.

Maps
  beta(m, n): inverse of the generator multiplication Sym^(n-m+1)(D^m U) -> Wedge^m(Sym^n U).
  gamma(m, n): inverse of the generator multiplication Sym^(n-m)(D^m U) -> D^m(Sym^(n-m) U).
  alpha(m, n) = Wedge^m(mult) o canonical embedding, D^m(Sym^(n-m) U) -> Wedge^m(Sym^(n-1) U).
  Weyman inclusion D^(2i) U -> D^(i+1) U (x) D^(i+1) U: x^(c) -> sum_a (c+1-2a) e_a (x) e_(c+1-a).
  Bigraded Q: D^(u+v+2) U via comultiplication; the full policy adds D^(u+v) U via
  comultiplication into D^u (x) D^v and insertion of 1 (x) x - x (x) 1.

Degrees
  green: W^(i+1) is evaluated in degree d = g - i, i = 0..floor((g-1)/2).
  bigraded identification: bidegree (a - u, g - 1 - a - v).
  Sym^N E twists: H0 row, Hk row, or t = 0 (transgression); other windows are rejected.
)";
}

namespace detail {

struct Common {
  std::uint64_t characteristic = 0;
  std::string format = "json";
  std::string out;
  bool timings = false;
};

struct Opts {
  std::optional<int> m, n, k, i, d, d2, r, g, a, u, v, t, N, max_i;
  std::size_t max_term_dim = KoszulOracleLimits{}.max_term_dim;
  std::string policy = "transparent";
  std::string suite;
  bool verify = false, oracle = false, matrices = false;
};

inline int need(const std::optional<int>& x, const char* flag) {
  if (!x) throw InvalidParameter(std::string("missing required flag --") + flag);
  return *x;
}

inline Json params_json(const Opts& o) {
  Json p = Json::object();
  auto put = [&](const char* name, const std::optional<int>& x) {
    if (x) p[name] = *x;
  };
  put("m", o.m);
  put("n", o.n);
  put("k", o.k);
  put("i", o.i);
  put("d", o.d);
  put("d2", o.d2);
  put("r", o.r);
  put("g", o.g);
  put("a", o.a);
  put("u", o.u);
  put("v", o.v);
  put("t", o.t);
  put("N", o.N);
  put("max_i", o.max_i);
  return p;
}

inline Json checks_json(const std::vector<CheckResult>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

inline Json slice_json(const SliceHomology& h) {
  return {{"dims", {h.dim_l2, h.dim_l1, h.dim_l0}},
          {"rank_d1", h.rank_d1},
          {"rank_d2", h.rank_d2},
          {"kernel_d2", h.kernel_d2()},
          {"homology", h.homology()},
          {"composite_zero", h.composite_zero}};
}

struct Output {
  Json result = Json::object();
  std::optional<std::string> csv;
  bool pass = true;
};

inline Output hermite_cmd(const Opts& o, Field f) {
  int m = need(o.m, "m"), n = need(o.n, "n");
  require(m >= 1 && m <= n, "hermite needs 1 <= m <= n");
  Output out;
  ExactMatrix alpha = hermite_alpha(m, n, f), beta = hermite_beta(m, n, f), gamma = hermite_gamma(m, n, f);
  out.result["alpha"] = to_json(alpha);
  out.result["beta"] = to_json(beta);
  out.result["gamma"] = to_json(gamma);
  if (o.verify) {
    HermiteReport h = verify_compatibilities(m, n, f);
    out.result["checks"] = checks_json(h.checks);
    out.result["pass"] = out.pass = h.pass();
  }
  return out;
}

inline Output cohomology_cmd(const Opts& o, Field f) {
  Output out;
  if (o.N) {
    SymPowerH0 h = h0_symN_E_twist(need(o.k, "k"), need(o.n, "n"), *o.N, need(o.t, "t"), f);
    out.result = {{"h0", h.h0}, {"window", to_string(h.window)}, {"i_max", h.i_max}};
    return out;
  }
  int m = need(o.m, "m"), d = need(o.d, "d"), i = need(o.i, "i");
  if (o.t) {
    CohTable c = wedge_E_cohomology(m, d, i, *o.t);
    out.result = {{"h", to_json(c.h)}, {"euler", c.euler()}};
    out.csv = cohomology_to_csv({c});
    return out;
  }
  SupernaturalReport s = supernatural_check(m, d, i);
  Json tables = Json::array();
  for (const auto& c : s.tables) tables.push_back({{"t", c.t}, {"h", to_json(c.h)}});
  out.result = {{"roots", s.roots},
                {"zero_twists", s.zero_twists},
                {"tables", tables},
                {"single_row", s.single_row},
                {"roots_match", s.roots_match},
                {"pass", s.pass()}};
  out.pass = s.pass();
  out.csv = cohomology_to_csv(s.tables);
  return out;
}

inline Output hankel_cmd(const Opts& o, Field f) {
  int n = need(o.n, "n"), k = need(o.k, "k");
  Output out;
  BettiTable en = eagon_northcott_betti(n, k);
  SecantInvariants s = secant_invariants(n, k);
  HilbertCrossCheck h = hilbert_cross_check(n, k);
  out.result = {{"betti", to_json(en)},
                {"hilbert_series", to_json(h.closed)},
                {"hilbert_cross_check", h.pass()},
                {"dim_proj", s.dim_proj},
                {"degree", s.degree},
                {"codim", s.codim},
                {"class_group_order", s.class_group_order},
                {"ulrich_index", s.ulrich_index},
                {"degree_identity", s.degree_identity}};
  out.csv = betti_to_csv(en);
  if (o.oracle) {
    int max_i = o.max_i ? *o.max_i : en.projective_dimension();
    BettiTable orc = koszul_tor_oracle(n, k, max_i, f, KoszulOracleLimits{o.max_term_dim});
    bool match = orc == betti_window(en, max_i, k);
    out.result["oracle_betti"] = to_json(orc);
    out.result["oracle_matches"] = match;
    out.pass = match;
    out.csv = betti_to_csv(orc);
  }
  return out;
}

inline Output mcm_cmd(const Opts& o, Field) {
  int n = need(o.n, "n"), k = need(o.k, "k"), r = need(o.r, "r");
  Output out;
  McmData m = mcm_data(n, k, r);
  out.result = {{"mu", m.mu},
                {"degree", m.degree},
                {"ulrich", m.ulrich},
                {"resolution_dims", m.resolution_dims},
                {"degree_shifts", m.degree_shifts}};
  if (r == -1) out.result["note"] = "generators of M_-1 normalized to degree 0; mu = rank of F_0";
  if (o.i) {
    GeneralizedHermite g = generalized_hermite_check(n, k, *o.i);
    out.result["generalized_hermite"] = {{"lhs_dim", g.lhs_dim},
                                         {"rhs_dim", g.rhs_dim},
                                         {"characters_equal", g.characters_equal},
                                         {"pass", g.pass()}};
    out.pass = g.pass();
  }
  return out;
}

inline Output weyman_cmd(const Opts& o, Field f) {
  Output out;
  ComplexSlice c;
  if (o.u || o.v) {
    QPolicy q = parse_policy(o.policy);
    c = bigraded_weyman_complex(need(o.u, "u"), need(o.v, "v"), need(o.d, "d"), need(o.d2, "d2"), q, f);
    out.result["policy"] = to_string(q);
  } else {
    c = weyman_complex(need(o.i, "i"), need(o.d, "d"), f);
  }
  SliceHomology h = slice_homology(c);
  out.result["slice"] = slice_json(h);
  if (o.matrices) out.result["matrices"] = {{"d1", to_json(c.d1)}, {"d2", to_json(c.d2)}};
  out.pass = h.composite_zero;
  return out;
}

inline Output green_cmd(const Opts& o, Field f) {
  int g = need(o.g, "g");
  Output out;
  GreenReport rep = green_check(g, f);
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"i", r.i},
                    {"d", r.d},
                    {"source_dim", r.source_dim},
                    {"target_dim", r.target_dim},
                    {"slice", slice_json(r.slice)},
                    {"dims_match", r.dims_match},
                    {"surjective", r.surjective},
                    {"pass", r.pass()}});
  TorProfile t = tor_profiles(g, o.a ? *o.a : -1);
  Json prof = {{"tangential_source", t.tangential_source}, {"tangential_target", t.tangential_target}};
  if (o.a) {
    prof["scroll_source"] = t.scroll_source;
    prof["scroll_target"] = t.scroll_target;
  }
  out.result = {{"rows", rows}, {"tor_profile", prof}, {"pass", rep.pass()}};
  // A failing row is a reported fact (e.g. small characteristic), not a command failure.
  return out;
}

inline Output verify_cmd(const Opts& o, Field f) {
  Output out;
  Json suites = Json::array();
  for (const auto& s : run_suites(o.suite, f)) {
    Json failures = Json::array();
    for (const auto& c : s.checks)
      if (!c.pass) failures.push_back({{"name", c.name}, {"detail", c.detail}});
    suites.push_back({{"suite", s.suite},
                      {"checks", s.checks.size()},
                      {"failed", s.failed()},
                      {"failures", failures},
                      {"pass", s.pass()}});
    out.pass = out.pass && s.pass();
  }
  out.result = {{"suites", suites}, {"pass", out.pass}};
  return out;
}

}  // namespace detail

// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hermite reciprocity, Schwarzenberger, Hankel and Weyman computations", "hlab"};
  app.require_subcommand(0, 1);
  bool conventions = false;
  app.add_flag("--conventions", conventions, "print the basis and sign conventions and exit");

  detail::Common common;
  detail::Opts o;
  using Handler = detail::Output (*)(const detail::Opts&, Field);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--char", common.characteristic, "field characteristic, 0 for Q")->default_val(0);
    sub->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", common.out, "write the payload to this path");
    sub->add_flag("--timings", common.timings, "record wall-clock time in the metadata");
  };
  auto opt = [](CLI::App* sub, const char* name, std::optional<int>& slot) { sub->add_option(name, slot); };

  CLI::App* hermite = app.add_subcommand("hermite", "alpha, beta, gamma matrices");
  opt(hermite, "--m", o.m);
  opt(hermite, "--n", o.n);
  hermite->add_flag("--verify", o.verify, "check the triangle, square and invertibility");
  commands.push_back({hermite, detail::hermite_cmd});

  CLI::App* coh = app.add_subcommand("cohomology", "Schwarzenberger bundle cohomology");
  for (auto [name, slot] : {std::pair{"--m", &o.m}, {"--d", &o.d}, {"--i", &o.i}, {"--t", &o.t}, {"--k", &o.k},
                            {"--n", &o.n}, {"--N", &o.N}})
    opt(coh, name, *slot);
  commands.push_back({coh, detail::cohomology_cmd});

  CLI::App* hankel = app.add_subcommand("hankel", "Eagon-Northcott tables and secant invariants");
  opt(hankel, "--n", o.n);
  opt(hankel, "--k", o.k);
  opt(hankel, "--max-i", o.max_i);
  hankel->add_flag("--oracle", o.oracle, "recompute the Betti table by Koszul homology");
  hankel->add_option("--max-term-dim", o.max_term_dim, "size guard for the oracle");
  commands.push_back({hankel, detail::hankel_cmd});

  CLI::App* mcm = app.add_subcommand("mcm", "rank one MCM modules");
  for (auto [name, slot] : {std::pair{"--n", &o.n}, {"--k", &o.k}, {"--r", &o.r}, {"--i", &o.i}}) opt(mcm, name, *slot);
  commands.push_back({mcm, detail::mcm_cmd});

  CLI::App* weyman = app.add_subcommand("weyman", "Weyman complex slice");
  for (auto [name, slot] :
       {std::pair{"--i", &o.i}, {"--d", &o.d}, {"--d2", &o.d2}, {"--u", &o.u}, {"--v", &o.v}})
    opt(weyman, name, *slot);
  weyman->add_option("--policy", o.policy, "transparent or full");
  weyman->add_flag("--matrices", o.matrices, "include the differentials");
  commands.push_back({weyman, detail::weyman_cmd});

  CLI::App* green = app.add_subcommand("green", "surjectivity of the Tor map for the tangential surface");
  opt(green, "--g", o.g);
  opt(green, "--a", o.a);
  commands.push_back({green, detail::green_cmd});

  CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", o.suite, "hermite, supernatural, hankel, selfdual, green or all")->required();
  commands.push_back({verify, detail::verify_cmd});

  for (auto& [sub, h] : commands) add_common(sub);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  if (conventions) {
    out << conventions_text();
    return kExitOk;
  }
  auto it = std::find_if(commands.begin(), commands.end(), [](const auto& c) { return c.first->parsed(); });
  if (it == commands.end()) {
    err << "error: a subcommand is required (hermite, cohomology, hankel, mcm, weyman, green, verify)\n";
    return kExitInvalid;
  }

  try {
    Field f = Field::from_characteristic(common.characteristic);
    auto start = std::chrono::steady_clock::now();
    detail::Output res = it->second(o, f);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::string payload;
    if (common.format == "csv") {
      if (!res.csv) throw InvalidParameter("csv output is only available for Betti and cohomology tables");
      payload = *res.csv;
    } else {
      Json meta = {{"field", f.name()}, {"characteristic", f.characteristic()}, {"conventions", kConventionsVersion}};
      if (common.timings) meta["timings_ms"] = ms;
      Json doc = {{"op", it->first->get_name()}, {"params", detail::params_json(o)}, {"result", res.result},
                  {"metadata", meta}};
      if (it->first == verify) doc["params"]["suite"] = o.suite;
      payload = doc.dump(2) + "\n";
    }
    if (!common.out.empty()) {
      std::ofstream file(common.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + common.out + " for writing");
      file << payload;
    } else {
      out << payload;
    }
    return res.pass ? kExitOk : kExitFailure;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace hlab::cli
