#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cayley/cli.hpp"
#include "cayley/json_io.hpp"

using namespace cayley;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const cli::Oracles& oracles = cli::Oracles::standard()) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err, oracles);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "cayley-iso-tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("growth CSV") {
  auto r = run_cli({"growth", "--group", "z^2", "--max-radius", "20", "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.starts_with("r,b\n0,1\n1,5\n2,13\n"));
  CHECK(r.out.find("\n20,841\n") != std::string::npos);
}

TEST_CASE("growth JSON reports the branch") {
  auto r = run_cli({"growth", "--group", "cyl:3", "--max-radius", "20"});
  CHECK(r.code == cli::kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["branch"] == "linear");
  CHECK(j["alpha"] == 6);
  CHECK(j["beta"] == 1);
}

TEST_CASE("counterexample find") {
  auto r = run_cli({"counterexample", "find", "--c", "0.5"});
  CHECK(r.code == cli::kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(parse_rational(j["stats"]["ratio"].get<std::string>()) < Rational(1, 2));

  auto exhausted = run_cli({"counterexample", "find", "--c", "1e-6", "--cap", "64"});
  CHECK(exhausted.code == cli::kExitError);
  CHECK(exhausted.err.find("error:") != std::string::npos);
}

TEST_CASE("counterexample stats flags the half-i depth bound") {
  auto r = run_cli({"counterexample", "stats", "--i", "2", "--k", "5"});
  CHECK(r.code == cli::kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["boundarySize"] == 60);
  CHECK(j["depthOracle"] == 2);
  CHECK(j["ratio"] == "8/7");
  CHECK(j["depthAtMostHalfI"] == false);
}

TEST_CASE("missing set file is a usage error") {
  auto r = run_cli({"separation", "--group", "z^2", "--set", "missing.json"});
  CHECK(r.code == cli::kExitError);
  CHECK(r.err.find("missing.json") != std::string::npos);

  CHECK(run_cli({"growth", "--group", "q^2"}).code == cli::kExitError);
  CHECK(run_cli({"nonsense"}).code == cli::kExitError);
}

TEST_CASE("random sets are reproducible from the seed") {
  std::vector<std::string> args{"separation", "--group", "free:2", "--random", "200", "--seed", "9"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  args[6] = "10";
  CHECK(run_cli(args).out != a.out);
}

TEST_CASE("a wrong depth oracle surfaces as a claim violation") {
  cli::Oracles broken = cli::Oracles::standard();
  broken.depth = [](const VertexSet&) -> std::uint64_t { return 1'000'000; };
  auto r = run_cli({"separation", "--group", "z^2", "--random", "50", "--seed", "1"}, broken);
  CHECK(r.code == cli::kExitViolation);
  CHECK(Json::parse(r.out)["consistent"] == false);

  CHECK(run_cli({"separation", "--group", "z^2", "--random", "50", "--seed", "1"}).code == cli::kExitOk);
}

TEST_CASE("emitted sets round-trip through the set commands") {
  const fs::path path = scratch("ball.json");
  auto r = run_cli({"ball", "--group", "z^2", "--radius", "10", "--emit-set", path.string()});
  REQUIRE(r.code == cli::kExitOk);
  VertexSet a = read_set_file(path);
  CHECK(a.size() == 221);

  auto bd = run_cli({"boundary", "--set", path.string()});
  CHECK(bd.code == cli::kExitOk);
  CHECK(Json::parse(bd.out)["boundarySize"] == 44);

  auto dp = run_cli({"depth", "--set", path.string()});
  CHECK(Json::parse(dp.out)["depth"] == 11);

  auto var = run_cli({"varopoulos", "--set", path.string()});
  CHECK(var.code == cli::kExitOk);
  CHECK(Json::parse(var.out)["holds"] == true);

  const fs::path cx = scratch("a25.json");
  REQUIRE(run_cli({"counterexample", "stats", "--i", "2", "--k", "5", "--emit-set", cx.string()}).code == 0);
  CHECK(read_set_file(cx).size() == 105);
}

TEST_CASE("free-group sets use words") {
  const fs::path path = scratch("free.json");
  std::ofstream(path) << R"({"group": "free:2", "vertices": ["", "a", "ab", "B"]})";
  auto r = run_cli({"boundary", "--set", path.string()});
  CHECK(r.code == cli::kExitOk);
  std::ofstream(path) << R"({"group": "free:2", "vertices": ["aA"]})";
  CHECK(run_cli({"boundary", "--set", path.string()}).code == cli::kExitError);
}

TEST_CASE("ring-like commands") {
  auto check = run_cli({"ringlike", "check", "--group", "cyl:3"});
  CHECK(check.code == cli::kExitOk);
  auto j = Json::parse(check.out);
  CHECK(j["s"] == 3);
  CHECK(j["t"] == 1);
  CHECK(j["q"] == 2);

  const fs::path path = scratch("cyl.json");
  Json set{{"group", "cyl:3"}, {"vertices", Json::array()}};
  for (int z = 0; z <= 9; ++z)
    for (int r = 0; r < 3; ++r)
      if (!(z == 5 && r == 0)) set["vertices"].push_back({z, r});
  std::ofstream(path) << set.dump();
  auto cover = run_cli({"ringlike", "cover", "--set", path.string()});
  CHECK(cover.code == cli::kExitOk);
  auto c = Json::parse(cover.out);
  CHECK(c["slack"] == 1);
  CHECK(c["k"] == 7);
  CHECK(c["bound"] == 168);
}

TEST_CASE("sweep ratio") {
  auto r = run_cli({"sweep", "ratio", "--diagonal", "4,8", "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "i,k,sizeA,boundarySize,depthOracle,ratio,closedFormsMatch\n"
                 "4,4,280,77,4,11/10,true\n"
                 "8,8,4176,309,8,103/174,true\n");
}

TEST_CASE("torus embedding") {
  auto r = run_cli({"counterexample", "torus", "--i", "2", "--k", "5"});
  CHECK(r.code == cli::kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["n"] == 31);
  CHECK(j["preserved"] == true);
  CHECK(j["halfVolume"] == true);
}
