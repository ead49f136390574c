#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "ecr/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = ecr::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("derive") {
  const auto r = run({"derive", "--a", "-1", "--b", "-2", "--c", "-1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "g: 1,-1,3,-8,22"));
  CHECK(contains(r.out, "gamma: 1,1,3,6,14,33"));
  CHECK(contains(r.out, "hankel: 1,2,1,-7,-16,-57"));

  const auto j = run({"derive", "--a=-1", "--b=-2", "--c=-1", "--format", "json", "--order", "16"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["g"].size() == 16);
  CHECK(doc["g"][3] == "-8");
  CHECK(doc["somos"]["curve_form"]["s"] == "-2");
  CHECK(doc["somos"]["appendix_form"] == doc["somos"]["curve_form"]);
  CHECK(ecr::io::stepset_from_json(doc["steps_g"]).origin_override == std::optional<ecr::Rational>(-1));
  CHECK(doc["eds"][5] == "-7");

  const auto csv = run({"--format", "csv", "derive", "--a", "-1", "--b", "-2", "--c", "-1", "--order", "8"});
  CHECK(csv.code == 0);
  CHECK(contains(csv.out, "g,1,-1,3,-8,22,-59,155,-396\n"));
}

TEST_CASE("derive rejects bad curves") {
  const auto s = run({"derive", "--a", "1", "--b", "-2", "--c", "-1"});
  CHECK(s.code == 2);
  CHECK(contains(s.err, "singular curve"));
  CHECK(run({"derive", "--a", "x", "--b", "0", "--c", "0"}).code == 2);
  CHECK(run({"derive", "--a", "1"}).code == 2);
  CHECK(run({"derive", "--a", "1", "--b", "0", "--c", "0", "--format", "yaml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  // (0,0,0) is smooth, so it derives normally.
  CHECK(run({"derive", "--a", "0", "--b", "0", "--c", "0"}).code == 0);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--a", "-1", "--b", "-2", "--c", "-1", "--order", "24"}).code == 0);
  const auto v = run({"verify", "--a", "2", "--b", "-5", "--c", "-1", "--order", "24", "--format", "json"});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["pass"] == true);
  CHECK(run({"verify", "--a", "-1", "--b", "-2", "--c", "-2"}).code == 2);
  // too small an order fails a check rather than the input
  CHECK(run({"verify", "--a", "-1", "--b", "-2", "--c", "-1", "--order", "4"}).code == 1);
}

TEST_CASE("hankel") {
  const auto r = run({"hankel", "1,-1,3,-8,22,-59,155,-396,978,-2310,5122"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1,2,1,-7,-16,-57"));
  const auto in = run({"hankel", "--format", "csv"}, "1 1 2 5\n14 42 132\n");
  CHECK(in.out == "1,1,1,1\n");
  const auto js = run({"hankel", "--format", "json", "--seq", R"(["1","1","2","5","14"])", "--count", "2"});
  CHECK(nlohmann::json::parse(js.out)["hankel"] == nlohmann::json::array({"1", "1"}));
  CHECK(run({"hankel", "1,2,x"}).code == 2);
  CHECK(run({"hankel", "1,2,3", "--count", "5"}).code == 2);
  CHECK(run({"hankel"}, "").code == 2);
}

TEST_CASE("eds and points") {
  const auto e = run({"eds", "--a", "-1", "--b", "-2", "--c", "-1", "--n", "6", "--format", "csv"});
  CHECK(e.out == "0,1,-1,2,-1,-7,16\n");

  const auto p = run({"points", "--a", "-1", "--b", "-2", "--c", "-1", "--n", "5"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "16/49,-169/343"));
  const auto pj = run({"points", "--a", "-1", "--b", "0", "--c", "-1", "--format", "json"});
  const auto doc = nlohmann::json::parse(pj.out);
  CHECK(doc["torsion_order"] == 3);
  CHECK(ecr::io::point_from_json(doc["points"][1]) == ecr::CurvePoint::affine(0, 1));
}

TEST_CASE("paths") {
  const std::string steps = R"([{"dx":1,"dy":1,"w":"1"},{"dx":1,"dy":0,"w":"4"},{"dx":2,"dy":0,"w":"2"},{"dx":2,"dy":-1,"w":"1"}])";
  const auto r = run({"paths", "--steps", steps, "--rows", "4", "--format", "csv", "--brute"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n4,1\n18,8,1\n81,52,12,1\n");
  const auto g = run({"paths", "--a", "-1", "--b", "-2", "--c", "-1", "--rows", "6", "--format", "json"});
  CHECK(ecr::io::triangle_from_json(nlohmann::json::parse(g.out))[5][0] == -59);
  const auto o = run({"paths", "--a", "-1", "--b", "-2", "--c", "-1", "--family", "orbit", "--r", "2", "--rows", "3"});
  CHECK(contains(o.out, "2: 3 2 1"));
  CHECK(run({"paths", "--steps", "[{\"dx\":0,\"dy\":1}]"}).code == 2);
  CHECK(run({"paths", "--steps", "not json"}).code == 2);
  CHECK(run({"paths"}).code == 2);
}

TEST_CASE("jfrac") {
  const auto r = run({"jfrac", "--a", "-1", "--b", "-2", "--c", "-1", "--depth", "4", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["lam"][0] == "2");
  CHECK(doc["matches_binomial_transform"] == true);
  CHECK(doc["expansion"][4] == "22");

  const auto s = run({"jfrac", "1,1,2,5,14,42,132"});
  CHECK(contains(s.out, "lam: 1,1,1"));
  CHECK(run({"jfrac", "--a", "-1", "--b", "0", "--c", "-1"}).code == 2);  // P has order 3
  CHECK(run({"jfrac", "2,1,1"}).code == 2);
}

TEST_CASE("oeis offline") {
  CHECK(run({"oeis", "--offline", "--id", "A025243", "--from", "gamma", "--a", "-1", "--b", "-2", "--c", "-1"}).code == 0);
  CHECK(run({"oeis", "--offline", "--id", "A023431", "--from", "gamma", "--a", "-1", "--b", "0", "--c", "-1"}).code == 0);
  CHECK(run({"oeis", "--offline", "--id", "A000108", "--from", "catalan"}).code == 0);
  CHECK(run({"oeis", "--offline", "--id", "A010892", "--from", "hankel", "--a", "-1", "--b", "0", "--c", "-1"}).code == 0);

  const auto miss = run({"oeis", "--offline", "--id", "A000108", "1,1,2,5,15,42"});
  CHECK(miss.code == 1);
  CHECK(contains(miss.out, "mismatch at index 4"));
  const auto j = run({"oeis", "--offline", "--id", "A000108", "--format", "json"}, "1 2 5 14 42");
  CHECK(nlohmann::json::parse(j.out)["offset"] == 1);

  CHECK(run({"oeis", "--offline", "--id", "A999999", "1,2,3"}).code == 2);
  CHECK(run({"oeis", "--offline", "--id", "nope", "1,2,3"}).code == 2);
  CHECK(run({"oeis", "--offline", "1,2,3"}).code == 2);
}

TEST_CASE("oeis network failure exits 3") {
  const auto cache = std::filesystem::temp_directory_path() / "ecr-cli-empty-cache";
  std::filesystem::remove_all(cache);
  ::setenv("EC_RIORDAN_CACHE", cache.c_str(), 1);
  ::setenv("EC_RIORDAN_OEIS_URL", "http://127.0.0.1:1", 1);
  CHECK(run({"oeis", "--id", "A000108", "1,1,2,5"}).code == 3);
  ::unsetenv("EC_RIORDAN_OEIS_URL");
  ::unsetenv("EC_RIORDAN_CACHE");
}

TEST_CASE("help exits 0") {
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(contains(h.out, "derive"));
}
