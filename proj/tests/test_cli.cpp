#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cli_harness.h"

namespace {

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

const char* kPair = R"({"degrees": [1, 2], "basis": [["1", "1"], ["0", "3"]]})";
const char* kPairBad = R"({"degrees": [1, 2], "basis": [["1", "1"], ["0", "9"]]})";
const char* kAct =
    R"({"degrees": [1, 2], "basis": [["1", "1"], ["0", "3"]],
        "point": {"t": "4", "x": "1", "ring": "O"}})";
const char* kQuot =
    R"({"source": {"degrees": [1, 2], "basis": [["3", "3"], ["0", "9"]]},
        "target": {"degrees": [1, 2], "basis": [["1", "1"], ["0", "3"]]},
        "map": [["1", "0"], ["0", "1"]]})";

}  // namespace

TEST_CASE("golden transcripts") {
  for (const auto& c : cli::kGoldenCases) {
    CAPTURE(c.args);
    cli::Result r = cli::run(c.args);
    CHECK(r.code == c.code);
    CHECK(r.out == cli::golden(c.file));
  }
}

TEST_CASE("identical invocations produce identical bytes") {
  const char* args = "selftest --suite taylor --seed 42";
  cli::Result a = cli::run(args);
  cli::Result b = cli::run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  cli::Result c = cli::run("selftest --suite taylor --seed 7");
  CHECK(c.out != a.out);
}

TEST_CASE("membership and express wire format") {
  cli::Result ex = cli::run(
      "express --backend ratfunc-char0 --k 2 --laurent \"(T^2-2*T+1)/e^4\"");
  CHECK(ex.code == 0);
  CHECK(ex.out == "{\"m\":0,\"coeffs\":[\"0\",\"0\",\"1\"]}\n");
  cli::Result rej = cli::run(
      "express --backend rational-padic --p 2 --k 1 --laurent \"(T-1)/4\"");
  CHECK(rej.code == 1);
  CHECK(rej.out == "{\"member\":false,\"witness\":{\"n\":1,\"value\":\"1/2\"}}\n");
  cli::Result sinf = cli::run(
      "membership --backend rational-padic --p 2 --k 1 --space sinf "
      "--laurent \"T/2-1/2\"");
  CHECK(sinf.code == 0);
  cli::Result tensor = cli::run(
      "membership --backend rational-padic --p 2 --k 1 --space tensor "
      "--laurent \"(T1*T2-1)/2\"");
  CHECK(tensor.code == 0);
}

TEST_CASE("comodule pipeline over files") {
  std::string pair = tmp_path("ogm_cli_pair.json");
  std::string bad = tmp_path("ogm_cli_pair_bad.json");
  std::string act = tmp_path("ogm_cli_act.json");
  std::string quot = tmp_path("ogm_cli_quot.json");
  write_file(pair, kPair);
  write_file(bad, kPairBad);
  write_file(act, kAct);
  write_file(quot, kQuot);
  std::string be = "--backend rational-padic --p 3 --k 1";

  cli::Result adm = cli::run("admissible " + be + " --in " + pair);
  CHECK(adm.code == 0);
  CHECK(adm.out == "{\"admissible\":true,\"bound\":2}\n");
  cli::Result admbad = cli::run("admissible " + be + " --in " + bad);
  CHECK(admbad.code == 1);
  CHECK(admbad.out ==
        "{\"admissible\":false,\"bound\":4,\"witness\":{\"n\":1,\"vec\":[\"1\",\"1\"]}}\n");

  cli::Result build = cli::run("comodule build " + be + " --in " + pair);
  CHECK(build.code == 0);
  CHECK(build.out ==
        "{\"admissible\":true,\"axioms\":{\"coassoc\":\"pass\",\"counit\":\"pass\","
        "\"integrality\":\"pass\"},\"degrees\":[1,2],\"basis\":[[\"1\",\"1\"],"
        "[\"0\",\"3\"]],\"entries\":[[{\"coeffs\":{\"1\":\"1\"}},{\"coeffs\":{}}],"
        "[{\"coeffs\":{\"1\":\"-1/3\",\"2\":\"1/3\"}},{\"coeffs\":{\"2\":\"1\"}}]]}\n");

  cli::Result verify = cli::run("comodule verify " + be + " --in " + bad);
  CHECK(verify.code == 1);
  CHECK(verify.out ==
        "{\"admissible\":false,\"witness\":{\"n\":1,\"vec\":[\"1\",\"1\"]},"
        "\"entry\":{\"l\":1,\"j\":0,\"n\":1,\"value\":\"1/3\"}}\n");

  cli::Result action = cli::run("comodule act " + be + " --in " + act);
  CHECK(action.code == 0);
  CHECK(action.out == "{\"matrix\":[[\"4\",\"4\"],[\"0\",\"16\"]]}\n");

  cli::Result q = cli::run("comodule quotient " + be + " --in " + quot);
  CHECK(q.code == 0);
  CHECK(q.out ==
        "{\"accepted\":true,\"moduli\":[1,1],\"length\":2,\"axioms\":"
        "{\"integrality\":\"pass\",\"divisibility\":\"pass\",\"counit\":\"pass\","
        "\"coassoc\":\"pass\"},\"basis\":[[\"1\",\"1\"],[\"0\",\"3\"]],\"entries\":"
        "[[{\"coeffs\":{\"0\":\"1\"}},{\"coeffs\":{}}],[{\"coeffs\":{\"0\":\"-1/3\","
        "\"1\":\"1/3\"}},{\"coeffs\":{\"0\":\"1\"}}]]}\n");
}

TEST_CASE("springer outputs parse and filter") {
  cli::Result rk1 = cli::run("springer enum --degrees 0 --a 1 --k 1 --q 5");
  CHECK(rk1.code == 0);
  auto j = nlohmann::json::parse(rk1.out);
  CHECK(j["lattices"].size() == 3);
  cli::Result fil =
      cli::run("springer enum --degrees 0,1 --a 1 --k 1 --q 3 --index -1");
  CHECK(fil.code == 0);
  auto jf = nlohmann::json::parse(fil.out);
  CHECK(jf["lattices"].size() == 4);
  for (const auto& lat : jf["lattices"]) CHECK(lat["index"] == -1);
}

TEST_CASE("exit code discipline") {
  std::string broken = tmp_path("ogm_cli_broken.json");
  write_file(broken, "{\"degrees\": [1,2], \"basis\": [[");
  std::string pair = tmp_path("ogm_cli_pair.json");
  write_file(pair, kPair);

  CHECK(cli::run("membership --backend bogus --laurent T").code == 2);
  CHECK(cli::run("membership --backend rational-padic --p 2 --k 1").code == 2);
  CHECK(cli::run("comodule build --backend rational-padic --p 3 --k 1 --in " +
                 broken).code == 2);
  CHECK(cli::run("selftest --suite nope").code == 2);
  CHECK(cli::run("admissible --backend rational-padic --p 2 --k 0 --in " +
                 pair).code == 2);
  CHECK(cli::run("springer count --degrees 0,1 --a 1 --k 1 --q 2 --ceiling 10")
            .code == 2);
  CHECK(cli::run("frobnicate").code == 2);
  CHECK(cli::run("--help").code == 0);
}

TEST_CASE("--out mirrors stdout bytes") {
  std::string out = tmp_path("ogm_cli_out.json");
  std::string args =
      "membership --backend rational-padic --p 2 --k 1 --laurent \"(T-1)/2\"";
  cli::Result direct = cli::run(args);
  cli::Result filed = cli::run(args + " --out " + out);
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(cli::read_file(out) == direct.out);
}
