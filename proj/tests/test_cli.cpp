#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hlab/cli.hpp"

using namespace hlab;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kSchemaDir = HLAB_SCHEMA_DIR;

}  // namespace

TEST_CASE("hankel command payload") {
  Run r = run({"hankel", "--n", "6", "--k", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["op"] == "hankel");
  CHECK(j["result"]["degree"] == 10);
  CHECK(j["result"]["class_group_order"] == 4);
  CHECK(betti_from_json(j["result"]["betti"]) == eagon_northcott_betti(6, 2));
  CHECK(j["metadata"]["conventions"] == kConventionsVersion);
  CHECK_FALSE(j["metadata"].contains("timings_ms"));
  CHECK(run({"hankel", "--n", "6", "--k", "2", "--timings"}).json()["metadata"].contains("timings_ms"));
}

TEST_CASE("hermite, green, weyman, mcm, cohomology commands") {
  Run h = run({"hermite", "--m", "1", "--n", "5", "--verify"});
  CHECK(h.code == 0);
  CHECK(h.json()["result"]["pass"] == true);
  CHECK(matrix_from_json(h.json()["result"]["gamma"]) == hermite_gamma(1, 5));

  Json g0 = run({"green", "--g", "7"}).json();
  CHECK(g0["result"]["pass"] == true);
  CHECK(g0["result"]["rows"].size() == 4);
  Run g2 = run({"green", "--g", "7", "--char", "2"});
  CHECK(g2.code == 0);
  CHECK(g2.json()["result"]["rows"].size() == 4);
  CHECK(g2.json()["metadata"]["field"] == "F_2");

  Json w = run({"weyman", "--i", "1", "--d", "2", "--matrices"}).json();
  CHECK(w["result"]["slice"]["dims"] == Json::array({3, 9, 6}));
  CHECK(matrix_from_json(w["result"]["matrices"]["d1"]) == weyman_complex(1, 2).d1);
  Json b = run({"weyman", "--u", "0", "--v", "0", "--d", "2", "--d2", "2"}).json();
  CHECK(b["result"]["slice"]["homology"] == 3);
  CHECK(b["result"]["policy"] == "transparent");

  Json m = run({"mcm", "--n", "6", "--k", "2", "--r", "3", "--i", "1"}).json();
  CHECK(m["result"]["mu"] == 10);
  CHECK(m["result"]["ulrich"] == true);
  CHECK(m["result"]["generalized_hermite"]["lhs_dim"] == 30);

  CHECK(run({"cohomology", "--k", "2", "--n", "4", "--N", "2", "--t", "-2"}).json()["result"]["h0"] == 1);
  Json c = run({"cohomology", "--m", "3", "--d", "2", "--i", "1"}).json();
  CHECK(c["result"]["roots"] == Json::array({-1, -2, -6}));
  CHECK(c["result"]["pass"] == true);
}

TEST_CASE("JSON and CSV round trips") {
  for (std::uint64_t p : {0u, 3u}) {
    Field f = Field::from_characteristic(p);
    for (ExactMatrix m : {hermite_beta(3, 6, f), hermite_gamma(2, 5, f), inverse(hermite_alpha(3, 5, f))}) {
      Json j = Json::parse(to_json(m).dump());
      CHECK(matrix_from_json(j) == m.without_labels());
      CHECK(to_json(matrix_from_json(j)) == j);
    }
  }
  // Non-integral rationals survive.
  ExactMatrix inv = inverse(ExactMatrix::from_rows(Field::rationals(), {{2, 1}, {0, 3}}));
  CHECK(matrix_from_json(Json::parse(to_json(inv).dump())) == inv.without_labels());

  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {6, 2}, {9, 3}}) {
    BettiTable b = eagon_northcott_betti(n, k);
    CHECK(betti_from_csv(betti_to_csv(b)) == b);
    CHECK(betti_from_json(Json::parse(to_json(b).dump())) == b);
  }
  Run csv = run({"hankel", "--n", "4", "--k", "1", "--format", "csv"});
  CHECK(csv.out == "i,j,beta\n0,0,1\n1,2,6\n2,3,8\n3,4,3\n");
  CHECK(betti_from_csv(run({"hankel", "--n", "6", "--k", "2", "--oracle", "--format", "csv"}).out) ==
        eagon_northcott_betti(6, 2));

  SupernaturalReport s = supernatural_check(2, 1, 1);
  auto back = cohomology_from_csv(cohomology_to_csv(s.tables));
  for (const auto& t : s.tables) {
    if (t.is_zero()) CHECK_FALSE(back.count(t.t));
    else CHECK(back.at(t.t) == t.h);
  }
  CHECK_THROWS_AS(betti_from_csv("a,b\n"), InvalidParameter);
}

TEST_CASE("exit codes") {
  CHECK(run({"hankel", "--n", "6", "--k", "5"}).code == cli::kExitInvalid);
  Run unknown = run({"hankel", "--n", "6", "--k", "2", "--bogus"});
  CHECK(unknown.code == cli::kExitInvalid);
  CHECK(unknown.err.find("--bogus") != std::string::npos);
  CHECK(run({"frobnicate"}).code == cli::kExitInvalid);
  CHECK(run({}).code == cli::kExitInvalid);
  Run missing = run({"hermite", "--m", "2"});
  CHECK(missing.code == cli::kExitInvalid);
  CHECK(missing.err.find("--n") != std::string::npos);
  CHECK(run({"green", "--g", "5", "--char", "4"}).code == cli::kExitInvalid);
  CHECK(run({"green", "--g", "5", "--format", "csv"}).code == cli::kExitInvalid);
  CHECK(run({"cohomology", "--k", "1", "--n", "3", "--N", "3", "--t", "1"}).code == cli::kExitInvalid);
  CHECK(run({"weyman", "--u", "0", "--v", "0", "--d", "1", "--d2", "1", "--policy", "odd"}).code == cli::kExitInvalid);
  CHECK(run({"verify", "nothing"}).code == cli::kExitInvalid);
  Run big = run({"hankel", "--n", "6", "--k", "2", "--oracle", "--max-term-dim", "10"});
  CHECK(big.code == cli::kExitResource);
  CHECK(big.err.find("exceeds limit 10") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("output file, conventions and schema") {
  auto path = std::filesystem::temp_directory_path() / "hlab_cli_test.json";
  Run r = run({"mcm", "--n", "6", "--k", "2", "--r", "0", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(Json::parse(slurp(path.string()))["result"]["mu"] == 1);
  std::filesystem::remove(path);

  Run conv = run({"--conventions"});
  CHECK(conv.code == 0);
  CHECK(conv.out == slurp(kSchemaDir + "/../docs/conventions.txt"));

  Json schema = Json::parse(slurp(kSchemaDir + "/command_result.schema.json"));
  for (const auto& args : std::vector<std::vector<std::string>>{{"hankel", "--n", "5", "--k", "2"},
                                                                {"verify", "supernatural"},
                                                                {"green", "--g", "4", "--a", "1"}}) {
    Json j = run(args).json();
    for (const auto& key : schema["required"]) CHECK(j.contains(key.get<std::string>()));
    for (const auto& key : schema["properties"]["metadata"]["required"])
      CHECK(j["metadata"].contains(key.get<std::string>()));
    CHECK(j["metadata"]["conventions"] == schema["properties"]["metadata"]["properties"]["conventions"]["const"]);
    for (const auto& [k, v] : j.items()) CHECK(schema["properties"].contains(k));
  }
}

TEST_CASE("identical invocations give identical bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"verify", "hankel", "--char", "5"},
                                                                {"hermite", "--m", "3", "--n", "6", "--verify"},
                                                                {"weyman", "--i", "2", "--d", "3", "--matrices"}}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  Run v = run({"verify", "all", "--char", "3"});
  CHECK(v.code == 0);
  CHECK(v.json()["result"]["suites"].size() == 5);
}
