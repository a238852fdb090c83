#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "kls/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = kls::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KLS_TEST_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("kls_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

kls::Json entries(const Result& r) { return kls::Json::parse(r.out)["entries"]; }

}  // namespace

TEST_CASE("compute on U_{2,3}") {
  auto r = run({"compute", data("u23.json"), "--kernel", "chi", "--side", "right"});
  REQUIRE(r.code == 0);
  auto doc = kls::Json::parse(r.out);
  CHECK(doc["kernel"] == "chi");
  CHECK(doc["side"] == "right");
  CHECK(doc["entries"]["0<1"].dump() == "[1]");
  CHECK(doc["poset"]["elements"].size() == 5);
  auto z = run({"compute", data("u23.json"), "--kernel", "chi", "--side", "z"});
  CHECK(entries(z)["0<1"].dump() == "[1,3,1]");
  auto l = run({"compute", data("u23.json"), "--kernel", "chi", "--side", "left"});
  auto left = entries(l);
  for (const auto& [key, value] : left.items()) CHECK(value.dump() == "[1]");
}

TEST_CASE("compute on the square") {
  auto r = run({"compute", data("square.json"), "--kernel", "lambda", "--side", "left"});
  REQUIRE(r.code == 0);
  CHECK(entries(r)["∅<Δ"].dump() == "[1,1]");
  auto bb = run({"compute", data("square.json"), "--kernel", "lambda", "--side", "bb"});
  CHECK(entries(bb)["∅<Δ"].dump() == "[1,5,5,1]");
}

TEST_CASE("compute csv output") {
  auto r = run({"compute", data("u23.json"), "--kernel", "chi", "--side", "kernel", "--out", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("pair,coefficients\n", 0) == 0);
  CHECK(r.out.find("0<1,2;-3;1\n") != std::string::npos);
  CHECK(r.out.find("\"0<{0}\"") == std::string::npos);
  auto k4 = run({"compute", data("k4.json"), "--kernel", "chi", "--side", "kernel", "--out", "csv"});
  // labels with commas are quoted
  CHECK(k4.out.find("\"0<{0,1,3}\",") != std::string::npos);
}

TEST_CASE("compute writes to a file") {
  auto path = (std::filesystem::temp_directory_path() / "kls_cli_test_out.json").string();
  auto r = run({"compute", data("u11.json"), "--kernel", "chi", "--side", "z", "-o", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  auto doc = kls::Json::parse(in);
  CHECK(doc["entries"]["0<1"].dump() == "[1,1]");
}

TEST_CASE("strict and threads do not change results") {
  auto base = run({"compute", data("bruhat4.json"), "--kernel", "R", "--side", "right"});
  auto threaded = run({"compute", data("bruhat4.json"), "--kernel", "R", "--side", "right", "--threads", "4"});
  CHECK(base.out == threaded.out);
  auto strict = run({"compute", data("bruhat4.json"), "--kernel", "R", "--side", "right", "--strict"});
  REQUIRE(strict.code == 0);
  CHECK(entries(strict) == entries(base));
  CHECK(kls::Json::parse(strict.out)["verified"].size() == 2);
}

TEST_CASE("custom kernels") {
  auto ok = run({"compute", data("custom_chi.json"), "--kernel", "custom", "--side", "right"});
  CHECK(ok.code == 0);
  CHECK(entries(ok)["0<1"].dump() == "[1]");
  auto bad = run({"compute", data("custom_zeta.json"), "--kernel", "custom"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("NotAKernel") != std::string::npos);
  auto report = run({"verify", data("custom_zeta.json"), "--kernel", "custom"});
  CHECK(report.code == 2);
  auto doc = kls::Json::parse(report.out);
  CHECK(doc["passed"] == false);
  CHECK(doc["checks"][0]["passed"] == false);
  CHECK(doc["checks"][0]["counterexample"] == "0<1");
}

TEST_CASE("exit codes") {
  auto lambda_chain = run({"compute", data("chain3.json"), "--kernel", "lambda"});
  CHECK(lambda_chain.code == 2);
  CHECK(lambda_chain.err.find("NotEulerian") != std::string::npos);
  CHECK(run({"compute", data("nope.json"), "--kernel", "chi"}).code == 1);
  CHECK(run({"compute", data("u23.json"), "--kernel", "bogus"}).code == 1);
  CHECK(run({"compute", data("u23.json")}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"compute", write_temp("broken.json", "{\"elements\": [\"a\"], "), "--kernel", "chi"}).code == 1);
  CHECK(run({"compute", write_temp("cycle.json", R"({"elements": ["a", "b"], "relations": [["a", "b"], ["b", "a"]],
                                                     "ranks": {"a<b": 1}})"),
             "--kernel", "chi"})
            .code == 1);
  CHECK(run({"compute", data("u23.json"), "--kernel", "R"}).code == 2);
  CHECK(run({"compute", write_temp("b9.json", R"({"type": "bruhat", "n": 9})"), "--kernel", "R"}).code == 2);
  CHECK(run({"compute", data("u23.json"), "--kernel", "chi", "--threads", "0"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify reports") {
  auto b3 = run({"verify", data("bruhat3.json"), "--kernel", "R"});
  CHECK(b3.code == 0);
  auto doc = kls::Json::parse(b3.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["alternating"] == true);
  bool saw_w0 = false;
  for (const auto& c : doc["checks"]) saw_w0 |= c["property"].get<std::string>().find("w0") != std::string::npos;
  CHECK(saw_w0);

  auto crapo = run({"verify", data("three_lines.json"), "--kernel", "chi", "--crapo", "--q", "2,3,5"});
  CHECK(crapo.code == 0);
  auto f5 = run({"verify", data("three_lines_f5.json"), "--kernel", "chi", "--crapo"});
  CHECK(f5.code == 0);
  CHECK(run({"verify", data("u23.json"), "--kernel", "chi", "--crapo"}).code == 2);
  CHECK(run({"verify", data("u23.json"), "--kernel", "hypertoric"}).code == 0);
  CHECK(run({"verify", data("cube.json"), "--kernel", "lambda", "--strict"}).code == 0);
  CHECK(run({"verify", data("three_lines.json"), "--kernel", "chi", "--crapo", "--q", "4"}).code == 2);
}

TEST_CASE("recover") {
  auto z = run({"compute", data("u23.json"), "--kernel", "chi", "--side", "z"});
  auto path = write_temp("u23_z.json", z.out);
  auto r = run({"recover", path});
  REQUIRE(r.code == 0);
  auto doc = kls::Json::parse(r.out);
  auto f = run({"compute", data("u23.json"), "--kernel", "chi", "--side", "right"});
  auto g = run({"compute", data("u23.json"), "--kernel", "chi", "--side", "left"});
  CHECK(doc["f"] == entries(f));
  CHECK(doc["g"] == entries(g));

  auto delta = run({"recover", data("delta_z.json")});
  REQUIRE(delta.code == 0);
  auto recovered = kls::Json::parse(delta.out);
  for (const auto& [key, value] : recovered["f"].items()) CHECK(value.dump() == "[]");

  auto bad = run({"recover", data("unsolvable_z.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("Unsolvable") != std::string::npos);
  CHECK(bad.err.find("0<1") != std::string::npos);
}
